#include "rankin/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>
#include <utility>
#include <vector>

#include "rankin/errors.hpp"

namespace rankin::io {

namespace {

constexpr const char* kFamilyHeader = "rankin-family v1";
constexpr const char* kFunctionalHeader = "rankin-functional-family v1";

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// Splits a document into meaningful lines (comments and blanks dropped).
std::vector<std::string_view> logical_lines(const std::string& text) {
    std::vector<std::string_view> lines;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto nl = rest.find('\n');
        std::string_view line = nl == std::string_view::npos ? rest : rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
        if (pos > start) fields.push_back(line.substr(start, pos - start));
    }
    return fields;
}

std::size_t parse_count(std::string_view token, const char* what) {
    std::size_t value = 0;
    const char* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(std::string("cannot parse ") + what + " from '" +
                         std::string(token) + "'");
    }
    return value;
}

// Cursor over logical lines with one-line lookahead.
struct Reader {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;

    bool done() const { return pos >= lines.size(); }
    std::string_view peek() const {
        if (done()) throw ParseError("unexpected end of document");
        return lines[pos];
    }
    std::string_view next() {
        auto l = peek();
        ++pos;
        return l;
    }
};

struct Document {
    DocumentKind kind = DocumentKind::family;
    std::vector<Atom> atoms;
    bool has_dim = false;
    std::size_t dim = 0;
    bool has_p = false;
    double p = 2.0;
    bool has_vectors = false;
    std::vector<double> vectors;
    bool has_functionals = false;
    std::vector<double> functionals;
};

std::vector<double> parse_block(Reader& r, std::size_t n, std::size_t d,
                                const char* what) {
    std::vector<double> data;
    data.reserve(n * d);
    for (std::size_t i = 0; i < n; ++i) {
        if (r.done()) {
            throw ParseError(std::string("truncated ") + what + " block");
        }
        const auto fields = split_fields(r.next());
        if (fields.size() != d) {
            throw ParseError(std::string(what) + " row " + std::to_string(i) + " has " +
                             std::to_string(fields.size()) + " entries, expected " +
                             std::to_string(d));
        }
        for (const auto f : fields) data.push_back(parse_double(f));
    }
    return data;
}

Document parse_document(const std::string& text) {
    Document doc;
    Reader r{logical_lines(text)};
    if (r.done()) throw ParseError("empty document");

    const auto header = r.next();
    if (header == kFamilyHeader) {
        doc.kind = DocumentKind::family;
    } else if (header == kFunctionalHeader) {
        doc.kind = DocumentKind::functional_family;
    } else {
        throw ParseError("unknown document header '" + std::string(header) + "'");
    }

    bool ended = false;
    while (!r.done()) {
        const auto line = r.next();
        const auto fields = split_fields(line);
        const auto key = fields.front();

        if (key == "end") {
            ended = true;
            break;
        }
        if (key == "atoms") {
            if (fields.size() != 2) throw ParseError("atoms line needs a count");
            const std::size_t n = parse_count(fields[1], "atom count");
            if (n == 0) throw ParseError("atom count must be positive");
            for (std::size_t i = 0; i < n; ++i) {
                if (r.done()) throw ParseError("truncated atom list");
                const auto atom_line = r.next();
                const auto parts = split_fields(atom_line);
                if (parts.size() < 2 || parts.front() != "atom") {
                    throw ParseError("expected 'atom <label> <weight>', got '" +
                                     std::string(atom_line) + "'");
                }
                const double w = parse_double(parts.back());
                // the label is everything between the keyword and the weight,
                // preserved verbatim (labels may contain spaces)
                const auto label_begin = atom_line.find(parts[0]) + parts[0].size();
                const auto weight_pos = atom_line.rfind(parts.back());
                const auto label =
                    trim(atom_line.substr(label_begin, weight_pos - label_begin));
                doc.atoms.push_back({std::string(label), w});
            }
        } else if (key == "dim") {
            if (fields.size() != 2) throw ParseError("dim line needs a value");
            doc.dim = parse_count(fields[1], "dimension");
            if (doc.dim == 0) throw ParseError("dimension must be positive");
            doc.has_dim = true;
        } else if (key == "p") {
            if (fields.size() != 2) throw ParseError("p line needs a value");
            doc.p = parse_double(fields[1]);
            doc.has_p = true;
        } else if (key == "vectors") {
            if (!doc.has_dim || doc.atoms.empty()) {
                throw ParseError("vectors block requires atoms and dim first");
            }
            doc.vectors = parse_block(r, doc.atoms.size(), doc.dim, "vectors");
            doc.has_vectors = true;
        } else if (key == "functionals") {
            if (!doc.has_dim || doc.atoms.empty()) {
                throw ParseError("functionals block requires atoms and dim first");
            }
            doc.functionals = parse_block(r, doc.atoms.size(), doc.dim, "functionals");
            doc.has_functionals = true;
        } else {
            throw ParseError("unknown directive '" + std::string(key) + "'");
        }
    }
    if (!ended) throw ParseError("document is missing its end line");
    if (doc.atoms.empty()) throw ParseError("document has no atoms");
    return doc;
}

void write_atoms(std::ostringstream& out, const MeasureSpace& space) {
    out << "atoms " << space.size() << "\n";
    for (const auto& a : space.atoms()) {
        if (a.label.find('\n') != std::string::npos ||
            a.label.find('\r') != std::string::npos) {
            throw InvalidArgument("atom labels must not contain line breaks");
        }
        out << "atom " << a.label << " " << format_double(a.weight) << "\n";
    }
}

void write_block(std::ostringstream& out, const std::vector<double>& data,
                 std::size_t n, std::size_t d) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            if (k > 0) out << " ";
            out << format_double(data[i * d + k]);
        }
        out << "\n";
    }
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) {
        throw Error("cannot format double");
    }
    return std::string(buf, ptr);
}

double parse_double(std::string_view token) {
    double value = 0.0;
    if (token.empty()) throw ParseError("empty number token");
    const char* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("cannot parse number from '" + std::string(token) + "'");
    }
    return value;
}

DocumentKind identify(const std::string& text) {
    Reader r{logical_lines(text)};
    if (r.done()) throw ParseError("empty document");
    const auto header = r.next();
    if (header == kFamilyHeader) return DocumentKind::family;
    if (header == kFunctionalHeader) return DocumentKind::functional_family;
    throw ParseError("unknown document header '" + std::string(header) + "'");
}

std::string write_family(const VectorFamily& fam) {
    std::ostringstream out;
    out << kFamilyHeader << "\n";
    write_atoms(out, fam.space());
    out << "dim " << fam.dim() << "\n";
    out << "vectors\n";
    write_block(out, fam.data(), fam.size(), fam.dim());
    out << "end\n";
    return out.str();
}

std::string write_space(const MeasureSpace& space) {
    std::ostringstream out;
    out << kFamilyHeader << "\n";
    write_atoms(out, space);
    out << "end\n";
    return out.str();
}

std::string write_functional_family(const FunctionalFamily& fam) {
    std::ostringstream out;
    out << kFunctionalHeader << "\n";
    write_atoms(out, fam.space());
    out << "dim " << fam.dim() << "\n";
    out << "p " << format_double(fam.p()) << "\n";
    out << "vectors\n";
    write_block(out, fam.vectors_data(), fam.size(), fam.dim());
    out << "functionals\n";
    write_block(out, fam.functionals_data(), fam.size(), fam.dim());
    out << "end\n";
    return out.str();
}

VectorFamily read_family(const std::string& text, Normalization mode) {
    auto doc = parse_document(text);
    if (doc.kind != DocumentKind::family) {
        throw ParseError("expected a rankin-family document");
    }
    if (!doc.has_vectors) {
        throw ParseError("family document has no vectors block");
    }
    return VectorFamily(MeasureSpace(std::move(doc.atoms)), doc.dim,
                        std::move(doc.vectors), mode);
}

FunctionalFamily read_functional_family(const std::string& text) {
    auto doc = parse_document(text);
    if (doc.kind != DocumentKind::functional_family) {
        throw ParseError("expected a rankin-functional-family document");
    }
    if (!doc.has_p) throw ParseError("functional document is missing p");
    if (!doc.has_vectors || !doc.has_functionals) {
        throw ParseError("functional document needs vectors and functionals blocks");
    }
    return FunctionalFamily(MeasureSpace(std::move(doc.atoms)), doc.dim, doc.p,
                            std::move(doc.vectors), std::move(doc.functionals));
}

MeasureSpace read_space(const std::string& text) {
    auto doc = parse_document(text);
    return MeasureSpace(std::move(doc.atoms));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw ParseError("cannot read '" + path + "'");
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out.good()) throw Error("failed writing '" + path + "'");
}

}  // namespace rankin::io
