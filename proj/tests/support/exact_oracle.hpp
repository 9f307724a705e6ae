#ifndef PBPHASE_TESTS_EXACT_ORACLE_HPP
#define PBPHASE_TESTS_EXACT_ORACLE_HPP

// Squared state coefficients in exact rational arithmetic, straight from the
// binomial/product definitions. Shares no code with the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace exact {

using Q = boost::multiprecision::cpp_rational;

inline Q binom(const Q& x, int n)
{
    Q r = 1;
    for (int k = 0; k < n; ++k)
        r = r * (x - k) / (k + 1);
    return r;
}

inline Q rising(const Q& start, const Q& step, int n)
{
    Q r = 1;
    for (int k = 0; k < n; ++k)
        r *= start + step * k;
    return r;
}

inline Q power(const Q& x, int n)
{
    return rising(x, 0, n);
}

inline std::vector<Q> binomial_state(const Q& eta, int M)
{
    std::vector<Q> p;
    for (int n = 0; n <= M; ++n)
        p.push_back(binom(M, n) * power(eta, n) * power(1 - eta, M - n));
    return p;
}

inline std::vector<Q> hypergeometric_state(const Q& L, int M, const Q& eta)
{
    std::vector<Q> p;
    for (int n = 0; n <= M; ++n)
        p.push_back(binom(L * eta, n) * binom(L * (1 - eta), M - n) / binom(L, M));
    return p;
}

inline std::vector<Q> polya_state(int M, const Q& gamma, const Q& eta)
{
    std::vector<Q> p;
    for (int n = 0; n <= M; ++n)
        p.push_back(binom(M, n) * rising(eta, gamma, n) * rising(1 - eta, gamma, M - n) / rising(1, gamma, M));
    return p;
}

inline std::vector<Q> hahn_state(const Q& alpha, const Q& beta, int M)
{
    std::vector<Q> p;
    for (int n = 0; n <= M; ++n)
        p.push_back(binom(M, n) * rising(alpha + 1, 1, n) * rising(beta + 1, 1, M - n) /
                    rising(alpha + beta + 2, 1, M));
    return p;
}

inline std::vector<Q> neg_hypergeometric_state(int M, const Q& beta, int s)
{
    const Q total = Q(M) / (1 - beta);
    std::vector<Q> p;
    for (int n = 0; n <= M; ++n)
        p.push_back(binom(n + s, n) * binom(total - n - s - 1, M - n) / binom(total, M));
    return p;
}

inline Q sum(const std::vector<Q>& p)
{
    Q s = 0;
    for (const Q& x : p)
        s += x;
    return s;
}

inline double to_double(const Q& q)
{
    return q.convert_to<double>();
}

} // namespace exact

#endif
