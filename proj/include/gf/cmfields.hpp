#ifndef GF_CMFIELDS_HPP
#define GF_CMFIELDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf/exactnum.hpp"

namespace gf
{

// --- binary quadratic forms -----------------------------------------------------

/// a x^2 + b x y + c y^2 with negative discriminant and a > 0.
struct QuadForm {
    BigInt a, b, c;

    BigInt discriminant() const
    {
        return b * b - 4 * a * c;
    }
    /// |b| <= a <= c, and b >= 0 when |b| = a or a = c.
    bool is_reduced() const;
    bool is_primitive() const;
    /// The reduced form in the same SL2(Z) class.
    QuadForm reduced() const;
    /// tau = (-b + sqrt(D)) / (2a), the root in the upper half-plane.
    std::string to_string() const;
    friend bool operator==(const QuadForm &, const QuadForm &) = default;
};

struct ClassNumber {
    std::int64_t discriminant;
    std::int64_t h;
    std::vector<QuadForm> forms; // reduced primitive forms, sorted by (a, b)
};

/// Counts reduced primitive forms; D < 0 and D = 0, 1 mod 4.
ClassNumber class_number(std::int64_t D);

bool is_fundamental_discriminant(std::int64_t D);

// --- real quadratic units ---------------------------------------------------------

enum class UnitOrder {
    Maximal, // ring of integers of Q(sqrt d)
    Pell,    // Z[sqrt d]
};

/// (x + y sqrt(d)) / z with z in {1, 2}.
struct QuadraticUnit {
    std::int64_t d;
    BigInt x, y, z;
    UnitOrder order;

    /// (x^2 - d y^2) / z^2, exactly +1 or -1.
    BigInt norm() const;
    Real value(Precision prec) const;
    /// log of the unit (the regulator).
    Real log(Precision prec) const;
    std::string to_string() const;
};

/// Smallest unit > 1 of the chosen order, from the continued fraction of
/// sqrt(d) (Pell order, or d = 2, 3 mod 4) or (1 + sqrt d)/2 (d = 1 mod 4).
QuadraticUnit fundamental_unit(std::int64_t d, UnitOrder order = UnitOrder::Maximal);

// --- the j-function ------------------------------------------------------------------

/// Coefficients c(-1), c(0), c(1), ... of j = 1/q + 744 + 196884 q + ...,
/// computed exactly as E4^3 / Delta with Delta = (E4^3 - E6^2) / 1728.
std::vector<BigInt> j_series_coefficients(std::size_t count);

/// Integer coefficients of E4, E6 and Delta up to q^(count-1).
std::vector<BigInt> e4_coefficients(std::size_t count);
std::vector<BigInt> e6_coefficients(std::size_t count);
std::vector<BigInt> delta_coefficients(std::size_t count);

struct JValue {
    Complex value;
    std::size_t terms;  // series terms used
    double tail_log2;   // log2 |q|^terms, the truncation scale
    std::optional<std::string> warning;
};

/// j(tau) for Im tau > 0. tau is first moved into the standard fundamental
/// domain, then E4^3/Delta is summed to |q|^N < 2^(-bits-32).
JValue j_invariant(const Complex &tau, Precision prec);

/// Raw q-series evaluation without reduction of tau (Im tau must be >= 0.2).
Complex j_series_eval(const Complex &tau, Precision prec);

/// tau = (-b + i sqrt|D|) / (2a) for the form.
Complex form_root(const QuadForm &f, Precision prec);

struct ClassPolynomial {
    std::int64_t discriminant;
    std::vector<BigInt> coefficients; // ascending, monic
    std::vector<QuadForm> forms;
    Precision precision;
    double max_rounding_distance;
};

/// prod over reduced forms of (X - j(tau_f)), rounded to integers. Precision
/// starts at max(256, 20 h sqrt|D|) (or `start`) and doubles until every
/// coefficient is within 1e-10 of an integer.
ClassPolynomial hilbert_class_polynomial(std::int64_t D, std::optional<Precision> start = std::nullopt,
                                         long max_bits = 1L << 16);

// --- explicit generator candidates ------------------------------------------------

enum class Formula {
    CmJ,         // k(j(sqrt(-d)))
    Exponential, // k(exp(2 pi i sqrt d + log log eps))
    Conjecture,  // k(exp(2 pi theta + log log eps)) from p(x)
};

std::string formula_tag(Formula f);

struct QuadFieldData {
    std::int64_t d;                  // squarefree radicand of the real field
    std::int64_t discriminant;       // of the order Z[theta] whose class number is used
    std::optional<std::int64_t> h;   // empty for real quadratic k
    std::optional<QuadraticUnit> epsilon;
    std::optional<Real> regulator;
};

struct GeneratorCandidate {
    Formula formula;
    QuadFieldData field;
    Complex value;
    std::string theta; // the evaluation point, as text
    RelationSearch algebraicity;
    int max_degree;
    std::optional<std::string> warning;
};

struct GeneratorOptions {
    Precision precision{256};
    /// Searched degree = 2 h + extra_degree.
    int extra_degree = 0;
    UnitOrder order = UnitOrder::Maximal;
};

/// j(sqrt(-d)) with a relation search up to degree 2 h(-4d).
GeneratorCandidate cm_generator(std::int64_t d, const GeneratorOptions &opts = {});

/// exp(2 pi i sqrt(d) + log log eps) = log(eps) e^(2 pi i sqrt d) with eps the
/// fundamental unit of Q(sqrt d), searched up to degree max(4, 2 h(-4d)).
GeneratorCandidate exp_generator(std::int64_t d, const GeneratorOptions &opts = {});

/// p(x) = x^2 - a1 x + a0 (a_i >= 0, given as coefficients high-to-low
/// [1, -a1, a0]). theta is the root of p in the closed upper half-plane, eps
/// the fundamental unit of the splitting field of q(x) = x^2 - a1 x - a0.
GeneratorCandidate conjecture_generator(const std::vector<BigInt> &p_coeffs, const GeneratorOptions &opts = {});

} // namespace gf

#endif
