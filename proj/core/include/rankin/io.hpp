#pragma once

#include <string>
#include <string_view>

#include "rankin/banach.hpp"
#include "rankin/family.hpp"
#include "rankin/measure.hpp"

namespace rankin::io {

// Line-oriented, self-describing text documents. Floats are written in
// shortest round-trip decimal, so write-then-read reproduces every value
// bit-exactly. '#' starts a comment; blank lines are ignored.
//
//   rankin-family v1
//   atoms <n>
//   atom <label> <weight>     (n lines; label may contain spaces)
//   dim <d>                   (optional: a bare measure space omits it)
//   vectors                   (present iff dim is)
//   <d values per line, one line per atom>
//   end
//
// The functional document starts with "rankin-functional-family v1", adds a
// "p <value>" line (inf spelled "inf") and a "functionals" block of the same
// shape as "vectors".

enum class DocumentKind { family, functional_family };

/// Shortest decimal string that parses back to exactly x.
std::string format_double(double x);

/// Strict full-token parse. Throws ParseError.
double parse_double(std::string_view token);

/// Kind from the header line. Throws ParseError on an unknown header.
DocumentKind identify(const std::string& text);

std::string write_family(const VectorFamily& fam);
std::string write_space(const MeasureSpace& space);
std::string write_functional_family(const FunctionalFamily& fam);

/// Throws ParseError on malformed input or when no vectors block is present.
VectorFamily read_family(const std::string& text,
                         Normalization mode = Normalization::strict);

FunctionalFamily read_functional_family(const std::string& text);

/// Reads just the measure space; accepts any document kind, with or without
/// vector blocks.
MeasureSpace read_space(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rankin::io
