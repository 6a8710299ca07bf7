/* dsl.hpp -- the .nsp declaration format: parser with spanned diagnostics,
 * canonical formatter, and the builtin space library.
 *
 * Grammar:
 *   document := space+
 *   space    := "space" IDENT "{" item* "}"
 *   item     := "parts" INT ";" | "rule" addr "=" addr ";"
 *             | "corner" addr ";" | "restrict" ("left"|"right") INT ";"
 * Comments run from '#' to end of line. ASCII only.
 */

#ifndef NESTED_DSL_HPP_
#define NESTED_DSL_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "nested/error.hpp"
#include "nested/space.hpp"

namespace nested {

enum class Severity { Warning, Error };

struct Diagnostic {
    Severity severity = Severity::Error;
    Errc code = Errc::SyntaxError;
    std::size_t offset = 0; // byte span into the source text
    std::size_t length = 0;
    std::string message;
};

struct LineCol {
    std::size_t line = 1; // 1-based
    std::size_t column = 1;
};

LineCol line_col(std::string_view text, std::size_t offset);
std::string render_diagnostic(std::string_view text, const Diagnostic& d);

/// Parse result for a whole document. Never throws on malformed input;
/// errors are reported as diagnostics and the affected spaces omitted.
struct DocumentParse {
    std::vector<SpaceSpec> spaces;
    std::vector<Diagnostic> diagnostics;

    bool ok() const {
        for (const Diagnostic& d : diagnostics)
            if (d.severity == Severity::Error) return false;
        return true;
    }
};

DocumentParse parse_document(std::string_view text);

/// First space of the document. Throws SyntaxError (or the specific
/// validation error) when the document does not parse cleanly.
SpaceSpec parse_spec(std::string_view text);

/// Canonical rendering; parse_spec(format_spec(s)) == s.
std::string format_spec(const SpaceSpec& spec);

/// Builtin spaces: cantor, gasket, gasket_compact, gasket_lattice,
/// real_line(N), unit_interval(N), naturals(N). Throws UnknownBuiltin.
SpaceSpec builtin(const std::string& name);

const std::vector<std::string>& builtin_names();

} // namespace nested

#endif // NESTED_DSL_HPP_
