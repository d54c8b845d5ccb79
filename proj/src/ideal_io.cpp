#include "kozmo/ideal_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "kozmo/errors.hpp"

namespace kozmo {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Cursor over one line; columns are 1-based.
class LineScanner {
public:
    LineScanner(std::string_view text, std::size_t line_no, std::size_t offset = 0)
        : text_(text), line_(line_no), pos_(offset) {}

    void skip_space() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void advance() { ++pos_; }
    std::size_t column() const { return pos_ + 1; }
    std::string_view rest() const { return text_.substr(pos_); }

    [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, line_, column()); }
    [[noreturn]] void fail_at(const std::string& message, std::size_t column) const {
        throw SyntaxError(message, line_, column);
    }

    std::string identifier() {
        const auto start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Exponent number() {
        if (peek() == '-') fail("negative exponent");
        if (!is_digit(peek())) fail("expected a non-negative integer");
        const auto start = column();
        std::uint64_t value = 0;
        while (is_digit(peek())) {
            value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (value > std::numeric_limits<Exponent>::max()) fail_at("exponent is too large", start);
            advance();
        }
        return static_cast<Exponent>(value);
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_;
};

std::string_view strip_comment(std::string_view line) {
    const auto hash = line.find('#');
    return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool starts_with_keyword(LineScanner& scan, std::string_view keyword) {
    scan.skip_space();
    const auto rest = scan.rest();
    if (rest.substr(0, keyword.size()) != keyword) return false;
    auto after = rest.substr(keyword.size());
    while (!after.empty() && (after.front() == ' ' || after.front() == '\t')) after.remove_prefix(1);
    if (after.empty() || after.front() != ':') return false;
    for (std::size_t k = 0; k < rest.size() - after.size() + 1; ++k) scan.advance();
    return true;
}

class Parser {
public:
    IdealDocument parse(std::string_view text) {
        std::size_t line_no = 0;
        bool have_ring = false;
        bool have_ideal = false;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            ++line_no;
            const auto line = strip_comment(text.substr(start, end - start));
            start = end + 1;

            LineScanner scan(line, line_no);
            if (scan.done()) continue;
            if (starts_with_keyword(scan, "ring")) {
                if (have_ring) scan.fail("ring is declared twice");
                parse_ring(scan);
                have_ring = true;
            } else if (starts_with_keyword(scan, "ideal")) {
                if (!have_ring) scan.fail("the ring line must come before the ideal");
                parse_generators(scan);
                have_ideal = true;
            } else {
                scan.fail(have_ring ? "expected 'ideal:'" : "expected 'ring:'");
            }
        }
        if (!have_ring) throw SyntaxError("missing ring line", line_no == 0 ? 1 : line_no, 1);
        if (!have_ideal) throw SyntaxError("missing ideal line", line_no == 0 ? 1 : line_no, 1);

        const auto n = doc_.variable_names.size();
        doc_.raw_generators = raw_.size();
        doc_.ideal = minimalize(std::move(raw_), n);
        doc_.dropped = doc_.raw_generators - doc_.ideal.size();
        return std::move(doc_);
    }

private:
    void parse_ring(LineScanner& scan) {
        std::set<std::string> seen;
        while (!scan.done()) {
            if (scan.peek() == ',') {
                scan.advance();
                continue;
            }
            const auto column = scan.column();
            if (!is_ident_start(scan.peek())) scan.fail("expected a variable name");
            auto name = scan.identifier();
            if (!seen.insert(name).second) scan.fail_at("variable '" + name + "' is declared twice", column);
            doc_.variable_names.push_back(std::move(name));
        }
        if (doc_.variable_names.empty()) scan.fail("the ring needs at least one variable");
        if (doc_.variable_names.size() > kMaxVariables) scan.fail("at most 64 variables are supported");
    }

    void parse_generators(LineScanner& scan) {
        if (scan.done()) return;
        while (true) {
            scan.skip_space();
            const bool vector = scan.peek() == '[';
            if (!format_seen_) {
                doc_.source_format = vector ? SourceFormat::ExponentVector : SourceFormat::MonomialString;
                format_seen_ = true;
            }
            raw_.push_back(vector ? parse_vector(scan) : parse_monomial(scan));
            if (scan.done()) return;
            if (scan.peek() != ',') scan.fail("expected ',' between generators");
            scan.advance();
            if (scan.done()) scan.fail("expected a generator after ','");
        }
    }

    Multidegree parse_vector(LineScanner& scan) {
        const auto open = scan.column();
        scan.advance();
        std::vector<Exponent> exps;
        while (true) {
            if (scan.done()) scan.fail("unterminated exponent vector");
            if (scan.peek() == ']') {
                scan.advance();
                break;
            }
            exps.push_back(scan.number());
        }
        const auto n = doc_.variable_names.size();
        if (exps.size() != n) {
            scan.fail_at("exponent vector has " + std::to_string(exps.size()) + " entries, the ring has " +
                             std::to_string(n) + " variables",
                         open);
        }
        return Multidegree(std::span<const Exponent>(exps));
    }

    Multidegree parse_monomial(LineScanner& scan) {
        const auto n = doc_.variable_names.size();
        Multidegree mu(n);
        scan.skip_space();
        if (scan.peek() == '1') {
            const auto column = scan.column();
            scan.advance();
            if (scan.done() || scan.peek() == ',') return mu;
            scan.fail_at("numeric coefficients are not allowed", column);
        }
        bool any = false;
        while (true) {
            scan.skip_space();
            const char c = scan.peek();
            if (c == '\0' || c == ',') break;
            if (c == '*') {
                if (!any) scan.fail("expected a variable");
                scan.advance();
                scan.skip_space();
                if (!is_ident_start(scan.peek())) scan.fail("expected a variable after '*'");
                continue;
            }
            if (is_digit(c)) scan.fail("numeric coefficients are not allowed");
            if (!is_ident_start(c)) scan.fail(std::string("unexpected character '") + c + "'");
            const auto i = match_variable(scan);
            Exponent e = 1;
            scan.skip_space();
            if (scan.peek() == '^') {
                scan.advance();
                scan.skip_space();
                e = scan.number();
            }
            if (std::uint64_t{mu[i]} + e > std::numeric_limits<Exponent>::max()) scan.fail("exponent is too large");
            mu[i] += e;
            any = true;
        }
        if (!any) scan.fail("expected a generator");
        return mu;
    }

    // Longest declared name that prefixes the input, so "xy" reads as x*y.
    std::size_t match_variable(LineScanner& scan) {
        const auto rest = scan.rest();
        std::size_t best = doc_.variable_names.size();
        std::size_t best_length = 0;
        for (std::size_t i = 0; i < doc_.variable_names.size(); ++i) {
            const auto& name = doc_.variable_names[i];
            if (name.size() > best_length && rest.substr(0, name.size()) == name) {
                best = i;
                best_length = name.size();
            }
        }
        if (best == doc_.variable_names.size()) {
            LineScanner probe = scan;
            scan.fail("unknown variable '" + probe.identifier() + "'");
        }
        for (std::size_t k = 0; k < best_length; ++k) scan.advance();
        return best;
    }

    IdealDocument doc_;
    std::vector<Multidegree> raw_;
    bool format_seen_ = false;
};

}  // namespace

bool IdealDocument::operator==(const IdealDocument& other) const {
    return variable_names == other.variable_names && ideal == other.ideal && source_format == other.source_format;
}

IdealDocument parse_ideal(std::string_view text) { return Parser{}.parse(text); }

IdealDocument read_ideal_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_ideal(buffer.str());
}

std::string format_ideal(const IdealDocument& document) {
    const auto& names = document.variable_names;
    require_same_dimension(names.size(), document.ideal.ring_dimension(), "format_ideal");
    std::string out = "ring:";
    for (const auto& name : names) out += " " + name;
    out += "\nideal:";
    bool first = true;
    for (const auto& g : document.generators()) {
        out += first ? " " : ", ";
        first = false;
        if (document.source_format == SourceFormat::ExponentVector) {
            out += "[";
            for (std::size_t i = 0; i < g.size(); ++i) out += (i ? " " : "") + std::to_string(g[i]);
            out += "]";
        } else {
            out += format_monomial(g, names);
        }
    }
    return out + "\n";
}

IdealDocument make_document(const MonomialIdeal& ideal) {
    IdealDocument doc;
    doc.variable_names = default_variable_names(ideal.ring_dimension());
    doc.ideal = ideal;
    doc.raw_generators = ideal.size();
    return doc;
}

}  // namespace kozmo
