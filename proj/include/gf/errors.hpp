#ifndef GF_ERRORS_HPP
#define GF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gf
{

/// A contract violation on otherwise well-formed input (bad discriminant,
/// reducible polynomial where a prime is required, smooth blow-up center...).
class DomainError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. Carries the byte offset of the offending character.
class SyntaxError : public std::invalid_argument
{
public:
    SyntaxError(const std::string &what, std::size_t offset)
        : std::invalid_argument(what + " at offset " + std::to_string(offset)), m_offset(offset)
    {
    }
    std::size_t offset() const noexcept
    {
        return m_offset;
    }

private:
    std::size_t m_offset;
};

} // namespace gf

#endif
