#pragma once

#include "reuse/lexer.hpp"
#include "reuse/source_model.hpp"

#include <span>

namespace reuse {

/**
 * Extracts class and method declarations from a token stream.
 *
 * C++: a `template <...>` clause flags the one declaration that follows it.
 * Classes are tracked by brace depth so members get owner links; function
 * definitions at namespace scope are free functions (no owner). Function
 * bodies are skipped, so local classes are not seen. Out-of-line member
 * definitions (`void A::f() {}`) and namespace-scope prototypes are not
 * counted: the in-class declaration or the definition is the one counted.
 *
 * Java: `class|interface|enum|record Name<T, ...>` is a generic type, and a
 * member carrying its own `<T>` list is a generic method or constructor.
 *
 * Anything the scanner cannot classify is skipped with an ERROR diagnostic
 * and scanning continues; macro invocations are skipped with a WARN.
 * Diagnostics carry no file name; parse_file fills it in.
 */
FileFacts scan_declarations(std::span<const Token> tokens, Dialect dialect);

}  // namespace reuse
