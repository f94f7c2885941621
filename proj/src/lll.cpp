// Integral LLL: all Gram-Schmidt data is kept as integers
//   d_i        = det of the Gram matrix of b_1..b_i,
//   lambda_ij  = d_j * mu_ij,
// so the reduction is exact without rational arithmetic.

#include "gf/errors.hpp"
#include "gf/exactnum.hpp"

namespace gf
{

namespace
{

BigInt dot(const std::vector<BigInt> &a, const std::vector<BigInt> &b)
{
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

// Round to nearest, ties toward +infinity.
BigInt round_div(const BigInt &num, const BigInt &den)
{
    BigInt q;
    BigInt n2 = 2 * num + den;
    BigInt d2 = 2 * den;
    mpz_fdiv_q(q.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
    return q;
}

struct Lll {
    IntMatrix b;
    std::vector<BigInt> d;                // d[0] = 1, d[i] for i = 1..n
    std::vector<std::vector<BigInt>> lam; // lam[k][j], j < k (1-based indices)
    std::size_t kmax = 1;

    explicit Lll(IntMatrix basis) : b(std::move(basis))
    {
        const std::size_t n = b.size();
        d.assign(n + 1, BigInt(0));
        lam.assign(n + 1, std::vector<BigInt>(n + 1, BigInt(0)));
        d[0] = 1;
        d[1] = dot(row(1), row(1));
        if (d[1] == 0) {
            throw DomainError("lll: zero basis vector");
        }
    }

    std::vector<BigInt> &row(std::size_t i)
    {
        return b[i - 1];
    }

    void gram_schmidt_row(std::size_t k)
    {
        for (std::size_t j = 1; j <= k; ++j) {
            BigInt u = dot(row(k), row(j));
            for (std::size_t i = 1; i < j; ++i) {
                u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
            }
            if (j < k) {
                lam[k][j] = u;
            } else {
                if (u == 0) {
                    throw DomainError("lll: basis vectors are linearly dependent");
                }
                d[k] = u;
            }
        }
    }

    void reduce(std::size_t k, std::size_t l)
    {
        BigInt two_lam = 2 * lam[k][l];
        if (abs(two_lam) <= d[l]) {
            return;
        }
        BigInt q = round_div(lam[k][l], d[l]);
        auto &bk = row(k);
        const auto &bl = row(l);
        for (std::size_t c = 0; c < bk.size(); ++c) {
            bk[c] -= q * bl[c];
        }
        lam[k][l] -= q * d[l];
        for (std::size_t i = 1; i < l; ++i) {
            lam[k][i] -= q * lam[l][i];
        }
    }

    void swap(std::size_t k)
    {
        std::swap(row(k), row(k - 1));
        for (std::size_t j = 1; j + 1 < k; ++j) {
            std::swap(lam[k][j], lam[k - 1][j]);
        }
        BigInt l = lam[k][k - 1];
        BigInt bb = (d[k - 2] * d[k] + l * l) / d[k - 1];
        for (std::size_t i = k + 1; i <= kmax; ++i) {
            BigInt t = lam[i][k];
            lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
            lam[i][k - 1] = (bb * t + l * lam[i][k]) / d[k];
        }
        d[k - 1] = bb;
    }

    void run(long dn, long dd)
    {
        const std::size_t n = b.size();
        std::size_t k = 2;
        while (k <= n) {
            if (k > kmax) {
                kmax = k;
                gram_schmidt_row(k);
            }
            reduce(k, k - 1);
            // Lovasz: dd*d_k*d_{k-2} < dn*d_{k-1}^2 - dd*lam_{k,k-1}^2 triggers a swap.
            BigInt lhs = dd * d[k] * d[k - 2];
            BigInt rhs = dn * d[k - 1] * d[k - 1] - dd * lam[k][k - 1] * lam[k][k - 1];
            if (lhs < rhs) {
                swap(k);
                if (k > 2) {
                    --k;
                }
                continue;
            }
            for (std::size_t l = k - 1; l-- > 1;) {
                reduce(k, l);
            }
            ++k;
        }
    }
};

} // namespace

IntMatrix lll_reduce(IntMatrix basis, long delta_num, long delta_den)
{
    if (delta_den <= 0 || 4 * delta_num <= delta_den || delta_num >= delta_den) {
        throw DomainError("lll: delta must lie in (1/4, 1)");
    }
    if (basis.size() < 2) {
        return basis;
    }
    Lll state(std::move(basis));
    state.run(delta_num, delta_den);
    return std::move(state.b);
}

} // namespace gf
