#include <algorithm>
#include <functional>

#include "gf/cmfields.hpp"
#include "gf/errors.hpp"

namespace gf
{

std::string formula_tag(Formula f)
{
    switch (f) {
    case Formula::CmJ:
        return "cm-j";
    case Formula::Exponential:
        return "exp-unit";
    case Formula::Conjecture:
        return "exp-theta";
    }
    return "unknown";
}

namespace
{

void require_squarefree_positive(std::int64_t d, std::int64_t min)
{
    if (d < min) {
        throw DomainError("d = " + std::to_string(d) + " must be >= " + std::to_string(min));
    }
    if (!is_squarefree(d)) {
        throw DomainError("d = " + std::to_string(d) + " is not squarefree");
    }
}

// exp(2 pi theta + log log eps), re-evaluated at +32 bits.
Validated<Complex> exponential_value(const std::function<Complex(Precision)> &theta, const QuadraticUnit &eps,
                                     Precision prec)
{
    return validated_eval(
        [&](Precision p) {
            const Real L = eps.log(p);
            const Real two_pi = ldexp(pi(p), 1);
            const Complex t = theta(p);
            const Complex w(two_pi * t.real() + log(L), two_pi * t.imag());
            return exp(w);
        },
        prec);
}

GeneratorCandidate finish(Formula formula, QuadFieldData field, Validated<Complex> value, std::string theta,
                          int max_degree, Precision prec)
{
    GeneratorCandidate c{formula, std::move(field), std::move(value.value), std::move(theta), {}, max_degree,
                         std::move(value.warning)};
    c.algebraicity = find_integer_relation(c.value, max_degree, prec);
    return c;
}

} // namespace

GeneratorCandidate cm_generator(std::int64_t d, const GeneratorOptions &opts)
{
    require_squarefree_positive(d, 1);
    const Precision prec = opts.precision;
    const std::int64_t D = -4 * d;
    QuadFieldData field{d, D, class_number(D).h, std::nullopt, std::nullopt};
    if (d >= 2) {
        field.epsilon = fundamental_unit(d, opts.order);
        field.regulator = field.epsilon->log(prec);
    }
    const Complex tau(Real(0L, prec), sqrt(Real(static_cast<long>(d), prec)));
    JValue j = j_invariant(tau, prec);
    const int max_degree = static_cast<int>(2 * *field.h) + opts.extra_degree;
    return finish(Formula::CmJ, std::move(field), Validated<Complex>{std::move(j.value), std::move(j.warning)},
                  "i*sqrt(" + std::to_string(d) + ")", max_degree, prec);
}

GeneratorCandidate exp_generator(std::int64_t d, const GeneratorOptions &opts)
{
    require_squarefree_positive(d, 2);
    const Precision prec = opts.precision;
    const std::int64_t D = -4 * d;
    QuadFieldData field{d, D, class_number(D).h, fundamental_unit(d, opts.order), std::nullopt};
    field.regulator = field.epsilon->log(prec);
    if (abs(*field.regulator - Real(1L, prec)) < pow2(-(prec.bits / 2), prec)) {
        throw DomainError("log log eps is undefined: log eps = 1");
    }
    auto theta = [d](Precision p) { return Complex(Real(0L, p), sqrt(Real(static_cast<long>(d), p))); };
    auto value = exponential_value(theta, *field.epsilon, prec);
    const int max_degree = std::max(4, static_cast<int>(2 * *field.h)) + opts.extra_degree;
    return finish(Formula::Exponential, std::move(field), std::move(value), "i*sqrt(" + std::to_string(d) + ")",
                  max_degree, prec);
}

GeneratorCandidate conjecture_generator(const std::vector<BigInt> &p, const GeneratorOptions &opts)
{
    if (p.size() != 3) {
        throw DomainError("conjecture_generator: only n = 2 is in scope (got degree " +
                          std::to_string(static_cast<long>(p.size()) - 1) + ")");
    }
    if (p[0] != 1) {
        throw DomainError("conjecture_generator: p must be monic");
    }
    const BigInt a1 = -p[1];
    const BigInt a0 = p[2];
    if (a1 < 0 || a0 < 0) {
        throw DomainError("conjecture_generator: p must be x^2 - a1 x + a0 with a1, a0 >= 0");
    }
    if (!a1.fits_slong_p() || !a0.fits_slong_p() || abs(a1) > BigInt(1L << 20) || abs(a0) > BigInt(1L << 40)) {
        throw DomainError("conjecture_generator: coefficients too large");
    }
    const BigInt disc_p = a1 * a1 - 4 * a0;
    if (disc_p >= 0 && is_perfect_square(disc_p)) {
        throw DomainError("conjecture_generator: p is reducible over Q");
    }
    // q(x) = x^2 - a1 x - a0 has discriminant a1^2 + 4 a0 >= 0.
    const BigInt disc_q = a1 * a1 + 4 * a0;
    if (disc_q == 0 || is_perfect_square(disc_q)) {
        throw DomainError("conjecture_generator: q splits over Q, so the real field has no fundamental unit");
    }
    const std::int64_t dq = squarefree_part(disc_q.get_si());
    const Precision prec = opts.precision;
    const std::int64_t Dp = disc_p.get_si();

    QuadFieldData field{dq, Dp, std::nullopt, fundamental_unit(dq, opts.order), std::nullopt};
    field.regulator = field.epsilon->log(prec);
    if (abs(*field.regulator - Real(1L, prec)) < pow2(-(prec.bits / 2), prec)) {
        throw DomainError("log log eps is undefined: log eps = 1");
    }
    int max_degree;
    std::string theta_text;
    std::function<Complex(Precision)> theta;
    const long la1 = a1.get_si();
    const long la0 = a0.get_si();
    if (Dp < 0) {
        field.h = class_number(Dp).h;
        max_degree = std::max(4, static_cast<int>(2 * *field.h)) + opts.extra_degree;
        theta = [la1, la0](Precision q) {
            return Complex(Real(la1, q) / Real(2L, q), sqrt(Real(4 * la0 - la1 * la1, q)) / Real(2L, q));
        };
        theta_text = "(" + a1.get_str() + " + i*sqrt(" + BigInt(-disc_p).get_str() + "))/2";
    } else {
        // Real k: theta is the larger real root; class numbers of real orders are not computed.
        max_degree = 4 + opts.extra_degree;
        theta = [la1, la0](Precision q) {
            return Complex((Real(la1, q) + sqrt(Real(la1 * la1 - 4 * la0, q))) / Real(2L, q), Real(0L, q));
        };
        theta_text = "(" + a1.get_str() + " + sqrt(" + disc_p.get_str() + "))/2";
    }
    auto value = exponential_value(theta, *field.epsilon, prec);
    return finish(Formula::Conjecture, std::move(field), std::move(value), theta_text, max_degree, prec);
}

} // namespace gf
