#ifndef KOZMO_IDEAL_IO_HPP
#define KOZMO_IDEAL_IO_HPP

// Text format:
//
//   # comment
//   ring: x y z
//   ideal: x^3, x^2*y, x z
//   ideal: [0 3 0], [0 0 3]
//
// A generator is a monomial (factors name or name^k, '*' optional, "1" for
// the unit ideal) or an exponent vector. Several ideal lines accumulate; an
// empty ideal line stands for the zero ideal.

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kozmo/monomial.hpp"

namespace kozmo {

enum class SourceFormat { MonomialString, ExponentVector };

struct IdealDocument {
    std::vector<std::string> variable_names;
    MonomialIdeal ideal;
    /// Format of the first generator; the formatter writes this one back.
    SourceFormat source_format = SourceFormat::MonomialString;
    /// Generators as written, before minimalization.
    std::size_t raw_generators = 0;
    /// Raw generators removed as duplicates or multiples of others.
    std::size_t dropped = 0;

    const std::vector<Multidegree>& generators() const noexcept { return ideal.generators(); }

    /// Compares names, ideal and format; generator bookkeeping is ignored.
    bool operator==(const IdealDocument& other) const;
};

/// Throws SyntaxError with the offending line and column.
IdealDocument parse_ideal(std::string_view text);

IdealDocument read_ideal_file(const std::filesystem::path& path);

std::string format_ideal(const IdealDocument& document);

/// Document with default variable names in monomial format.
IdealDocument make_document(const MonomialIdeal& ideal);

}  // namespace kozmo

#endif  // KOZMO_IDEAL_IO_HPP
