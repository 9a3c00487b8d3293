#include "dcheb/loggamma.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace dcheb {
namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table;  // B_0, B_1, ...

void extend_bernoulli(unsigned upto) {
    // B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k
    if (bernoulli_table.empty()) bernoulli_table = {Rational(1), Rational(-1, 2)};
    while (bernoulli_table.size() <= upto) {
        unsigned m = static_cast<unsigned>(bernoulli_table.size());
        if (m % 2 == 1) {
            bernoulli_table.emplace_back(0);
            continue;
        }
        Rational sum = 0;
        Integer binom = 1;  // C(m+1, k), updated incrementally
        for (unsigned k = 0; k < m; ++k) {
            sum += Rational(binom) * bernoulli_table[k];
            binom = binom * (int(m) + 1 - int(k)) / (int(k) + 1);
        }
        bernoulli_table.push_back(-sum / (int(m) + 1));
    }
}

}  // namespace

Rational bernoulli(unsigned m) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    extend_bernoulli(m);
    return bernoulli_table[m];
}

Cplx log_gamma(const Cplx& w) {
    if (w.im == 0 && w.re <= 0)
        throw std::domain_error("log_gamma: real argument <= 0 (pole set or ambiguous side)");
    unsigned bits = working_bits();
    // Promote so the Stirling tail bottoms out below 2^-(bits+64):
    // smallest term ~ e^{-2 pi |w|}, and 2 pi sigma >= (bits+64) log 2 at sigma below.
    Real sigma = Real(111) / 1000 * (int(bits) + 64) + 8;
    long shift = 0;
    if (w.re < sigma) {
        Real k = ceil(sigma - w.re);
        shift = static_cast<long>(k);
    }
    Cplx wp = w + Cplx(Real(shift));

    // Stirling: (w-1/2) log w - w + log(2 pi)/2 + sum B_{2k} / (2k(2k-1) w^{2k-1})
    Cplx lw = log(wp);
    Cplx series = (wp - Cplx(Real(1) / 2)) * lw - wp + Cplx(log(2 * const_pi()) / 2);
    Cplx winv = Cplx(Real(1)) / wp;
    Cplx winv2 = winv * winv;
    Cplx wpow = winv;  // w^{-(2k-1)}
    Real cutoff = ldexp(Real(1), -static_cast<int>(bits + 64));
    Real scale = abs(series);
    Real prev_mag = -1;
    for (unsigned k = 1; k < 4 * bits; ++k) {
        Rational b = bernoulli(2 * k);
        Real coeff = Real(numerator(b)) / Real(denominator(b));
        coeff /= Real(2 * k) * Real(2 * k - 1);
        Cplx term = coeff * wpow;
        Real mag = abs(term);
        if (prev_mag >= 0 && mag > prev_mag) break;  // divergent tail turned
        series += term;
        if (mag < cutoff * scale) break;
        prev_mag = mag;
        wpow *= winv2;
    }

    for (long j = 0; j < shift; ++j) series -= log(w + Cplx(Real(j)));
    return series;
}

}  // namespace dcheb
