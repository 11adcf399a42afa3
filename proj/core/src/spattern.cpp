#include "nsmp/spattern.hpp"

#include <sstream>

namespace nsmp {

bool symbol_admits(SSymbol sym, Sign s) {
    switch (sym) {
        case SSymbol::Zero: return s == Sign::Zero;
        case SSymbol::Plus: return s == Sign::Plus;
        case SSymbol::Minus: return s == Sign::Minus;
        case SSymbol::Star: return s != Sign::Zero;
        case SSymbol::NonNeg: return s != Sign::Minus;
        case SSymbol::NonPos: return s != Sign::Plus;
        case SSymbol::Any: return true;
    }
    return false;
}

bool symbol_relaxes(SSymbol b, SSymbol a) {
    for (Sign s : {Sign::Zero, Sign::Plus, Sign::Minus})
        if (symbol_admits(a, s) && !symbol_admits(b, s)) return false;
    return true;
}

std::string symbol_token(SSymbol sym) {
    switch (sym) {
        case SSymbol::Zero: return "0";
        case SSymbol::Plus: return "+";
        case SSymbol::Minus: return "-";
        case SSymbol::Star: return "*";
        case SSymbol::NonNeg: return "0+";
        case SSymbol::NonPos: return "0-";
        case SSymbol::Any: return "0*";
    }
    return "?";
}

std::string SPattern::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) os << ' ';
            os << symbol_token(at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

SPattern parse_spattern(const std::string& text) {
    std::vector<std::vector<SSymbol>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream toks(line);
        std::vector<SSymbol> row;
        std::string tok;
        while (toks >> tok) {
            if (tok == "0") row.push_back(SSymbol::Zero);
            else if (tok == "+") row.push_back(SSymbol::Plus);
            else if (tok == "-") row.push_back(SSymbol::Minus);
            else if (tok == "*") row.push_back(SSymbol::Star);
            else if (tok == "0+") row.push_back(SSymbol::NonNeg);
            else if (tok == "0-") row.push_back(SSymbol::NonPos);
            else if (tok == "0*") row.push_back(SSymbol::Any);
            else throw ParseError("bad relaxed-pattern token: '" + tok + "'");
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty pattern");
    for (const auto& row : rows)
        if (row.size() != rows[0].size()) throw ParseError("ragged pattern rows");
    if (rows.size() != rows[0].size()) throw ParseError("pattern is not square");

    SPattern t(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) t.at(i, j) = rows[i][j];
    return t;
}

bool matches_spattern(const SignPattern& p, const SPattern& t) {
    if (p.size() != t.size()) throw DimensionMismatch("pattern dimensions differ");
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (!symbol_admits(t.at(i, j), p.at(i, j))) return false;
    return true;
}

}  // namespace nsmp
