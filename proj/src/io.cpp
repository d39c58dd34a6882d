#include "signreg/io.hpp"

#include <fstream>
#include <sstream>

namespace signreg {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::size_t parse_count(const Token& t, std::size_t line) {
    std::size_t v = 0;
    if (t.text.empty()) throw ParseError(line, t.column, "expected a dimension");
    for (char c : t.text) {
        if (c < '0' || c > '9') throw ParseError(line, t.column, "bad dimension '" + std::string(t.text) + "'");
        v = v * 10 + static_cast<std::size_t>(c - '0');
        if (v > 1'000'000) throw ParseError(line, t.column, "dimension too large");
    }
    if (v == 0) throw ParseError(line, t.column, "dimensions must be at least 1");
    return v;
}

}  // namespace

RatMatrix parse_matrix(std::string_view text) {
    std::size_t m = 0;
    std::size_t n = 0;
    bool have_header = false;
    std::vector<Rational> entries;
    std::size_t body_rows = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        const auto toks = split(line);
        if (toks.empty() || toks.front().text.front() == '#') continue;
        if (!have_header) {
            if (toks.size() != 2) throw ParseError(line_no, toks.front().column, "header must be \"m n\"");
            m = parse_count(toks[0], line_no);
            n = parse_count(toks[1], line_no);
            have_header = true;
            entries.reserve(m * n);
            continue;
        }
        if (body_rows == m) throw ParseError(line_no, toks.front().column, "more than " + std::to_string(m) + " rows");
        if (toks.size() != n)
            throw ParseError(line_no, toks.size() > n ? toks[n].column : line.size() + 1,
                             "expected " + std::to_string(n) + " entries, found " + std::to_string(toks.size()));
        for (const auto& t : toks) {
            try {
                entries.push_back(Rational::parse(t.text));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, t.column, e.what());
            }
        }
        ++body_rows;
    }
    if (!have_header) throw ParseError(line_no, 1, "missing \"m n\" header");
    if (body_rows != m)
        throw ParseError(line_no, 1, "expected " + std::to_string(m) + " rows, found " + std::to_string(body_rows));
    return RatMatrix(m, n, std::move(entries));
}

RatMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

std::string emit_matrix(const RatMatrix& a) {
    std::ostringstream os;
    os << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? " " : "") << a(i, j);
        os << '\n';
    }
    return os.str();
}

RatVector parse_vector(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw ParseError(1, 1, "empty vector");
    RatVector v(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        try {
            v[i] = Rational::parse(tokens[i]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(1, i + 1, e.what());
        }
    }
    return v;
}

}  // namespace signreg
