#include <cstdio>
#include <optional>
#include <sstream>

#include "backlimit/errors.hpp"
#include "backlimit/pl_map.hpp"

namespace backlimit {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        out.push_back(Token{line.substr(start, i - start), start + 1});
    }
    return out;
}

Rat literal(const Token& t, std::size_t line_no) {
    try {
        return Rat::parse_fraction(t.text);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no, t.column);
    }
}

}  // namespace

PLMap parse_map(std::string_view text) {
    std::optional<Interval> domain;
    std::vector<Breakpoint> bps;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        ++line_no;
        const auto toks = tokenize(line);
        if (!toks.empty()) {
            const auto& kw = toks.front();
            if (kw.text != "interval" && kw.text != "breakpoint") {
                throw ParseError("unknown keyword '" + std::string(kw.text) + "'", line_no, kw.column);
            }
            if (toks.size() != 3) {
                const std::size_t col = toks.size() > 3 ? toks[3].column : line.size() + 1;
                throw ParseError("'" + std::string(kw.text) + "' takes exactly two rational literals", line_no, col);
            }
            Rat a = literal(toks[1], line_no);
            Rat b = literal(toks[2], line_no);
            if (kw.text == "interval") {
                if (domain) throw ParseError("duplicate 'interval' line", line_no, kw.column);
                if (!(a < b)) throw ParseError("interval needs lo < hi", line_no, toks[1].column);
                domain = Interval::closed(std::move(a), std::move(b));
            } else {
                bps.push_back(Breakpoint{std::move(a), std::move(b)});
            }
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    if (!domain) throw ParseError("missing 'interval' line", line_no, 1);
    return PLMap::create(*domain, std::move(bps));
}

std::string emit_map(const PLMap& f) {
    std::ostringstream os;
    os << "interval " << f.domain().lo << ' ' << f.domain().hi << '\n';
    for (const auto& b : f.breakpoints()) os << "breakpoint " << b.x << ' ' << b.y << '\n';
    return os.str();
}

std::string map_digest(const PLMap& f) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(emit_map(f))));
    return buf;
}

}  // namespace backlimit
