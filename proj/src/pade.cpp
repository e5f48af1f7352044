#include "resum/pade.hpp"

#include "resum/errors.hpp"

#include <algorithm>
#include <utility>

namespace resum {

namespace mp = boost::multiprecision;

PadeApproximant pade_fit(const PowerSeries& s, int L, int M)
{
    if (L < 0 || M < 0 || L + M > s.order())
        throw UsageError("pade_fit: need L, M >= 0 and L + M <= series order");
    auto f = [&s](int n) { return n < 0 ? Real(0) : s[n]; };

    std::vector<Real> q(static_cast<size_t>(M + 1), Real(0));
    q[0] = 1;
    if (M > 0) {
        // sum_{j=1}^{M} q_j f_{L+i-j} = -f_{L+i}, i = 1..M
        std::vector<std::vector<Real>> A(static_cast<size_t>(M), std::vector<Real>(static_cast<size_t>(M + 1)));
        Real amax = 0;
        for (int i = 0; i < M; ++i) {
            for (int j = 0; j < M; ++j) {
                A[i][j] = f(L + i - j);
                amax = std::max<Real>(amax, mp::abs(A[i][j]));
            }
            A[i][M] = -f(L + i + 1);
        }
        if (amax == 0)
            throw DegeneracyError("pade_fit: Pade system is zero (rank 0 of " + std::to_string(M) + ")");
        const Real tiny = eps_digits(10) * amax;
        int rank = 0;
        bool singular = false;
        for (int c = 0; c < M; ++c) {
            int piv = c;
            for (int r = c + 1; r < M; ++r)
                if (mp::abs(A[r][c]) > mp::abs(A[piv][c]))
                    piv = r;
            if (mp::abs(A[piv][c]) <= tiny) {
                singular = true;
                continue;
            }
            ++rank;
            std::swap(A[piv], A[c]);
            for (int r = c + 1; r < M; ++r) {
                Real m = A[r][c] / A[c][c];
                if (m == 0)
                    continue;
                for (int j = c; j <= M; ++j)
                    A[r][j] -= m * A[c][j];
            }
        }
        if (singular)
            throw DegeneracyError("pade_fit: [" + std::to_string(L) + "/" + std::to_string(M) +
                                  "] system is singular (numerical rank " + std::to_string(rank) + " of " +
                                  std::to_string(M) + ")");
        std::vector<Real> x(static_cast<size_t>(M));
        for (int i = M - 1; i >= 0; --i) {
            Real v = A[i][M];
            for (int j = i + 1; j < M; ++j)
                v -= A[i][j] * x[j];
            x[i] = v / A[i][i];
        }
        for (int j = 1; j <= M; ++j)
            q[j] = x[j - 1];
    }
    std::vector<Real> p(static_cast<size_t>(L + 1), Real(0));
    for (int i = 0; i <= L; ++i)
        for (int j = 0; j <= std::min(i, M); ++j)
            p[i] += q[j] * f(i - j);
    return PadeApproximant{std::move(p), std::move(q)};
}

PadeValue pade_eval_checked(const PadeApproximant& p, const Real& g)
{
    Real den = horner(p.denominator, g);
    Real scale = 0, ag = mp::abs(g);
    for (auto it = p.denominator.rbegin(); it != p.denominator.rend(); ++it)
        scale = scale * ag + mp::abs(*it);
    if (mp::abs(den) <= eps_digits(10) * scale)
        throw PoleError("pade_eval: denominator vanishes at g = " + to_string(g, 20));
    PadeValue v;
    v.value = horner(p.numerator, g) / den;
    v.near_pole = mp::abs(den) < Real("1e-6") * scale;
    return v;
}

Real pade_eval(const PadeApproximant& p, const Real& g)
{
    return pade_eval_checked(p, g).value;
}

PowerSeries pade_taylor(const PadeApproximant& p, int K)
{
    // c = P / Q by long division
    std::vector<Real> c(static_cast<size_t>(K + 1), Real(0));
    const int M = static_cast<int>(p.denominator.size()) - 1;
    for (int n = 0; n <= K; ++n) {
        Real v = n < static_cast<int>(p.numerator.size()) ? p.numerator[n] : Real(0);
        for (int j = 1; j <= std::min(n, M); ++j)
            v -= p.denominator[j] * c[n - j];
        c[n] = v / p.denominator[0];
    }
    return PowerSeries(std::move(c), "g");
}

}  // namespace resum
