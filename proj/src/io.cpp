#include "parith/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace parith {

namespace io_detail {

std::string kind_token(ConstraintKind kind) { return kind_name(kind); }

std::optional<ConstraintKind> parse_kind(const std::string& token) {
    if (token == "data") return ConstraintKind::Data;
    if (token == "structural") return ConstraintKind::Structural;
    if (token == "universal") return ConstraintKind::Universal;
    return std::nullopt;
}

void write_header(std::ostream& os, std::uint64_t vars, std::uint64_t rows) {
    os << "vars " << vars << " rows " << rows << '\n';
}

void write_env(std::ostream& os, const Environment& env) {
    const char* kind = env.kind == EnvironmentKind::Addition ? "addition"
                       : env.kind == EnvironmentKind::ShiftedAddition
                           ? "shifted"
                           : "multiplication";
    os << "env " << kind << ' ' << env.n << ' ' << env.m << '\n';
}

void write_unknown(std::ostream& os, const Requirement& r) {
    os << "u " << r.str() << '\n';
}

void write_row_ints(std::ostream& os, ConstraintKind kind,
                    const std::vector<std::pair<int, UnknownId>>& terms,
                    int rhs) {
    char buf[64];
    os << "row " << kind_token(kind);
    for (const auto& [coef, id] : terms) {
        std::snprintf(buf, sizeof buf, " %d*%d", coef, id + 1);
        os << buf;
    }
    os << " = " << rhs << '\n';
}

}  // namespace io_detail

void export_native(const LpSystem& sys, std::ostream& os) {
    io_detail::write_header(os, sys.unknowns.size(), sys.constraints.size());
    io_detail::write_env(os, sys.env);
    for (const Requirement& r : sys.unknowns.requirements())
        io_detail::write_unknown(os, r);
    for (const LinearConstraint& row : sys.constraints) {
        os << "row " << io_detail::kind_token(row.kind);
        for (const auto& term : row.terms)
            os << ' ' << term.coef.str() << '*' << term.unknown + 1;
        os << " = " << row.rhs.str() << '\n';
    }
}

namespace {

Requirement parse_requirement(const std::string& text) {
    if (text.size() < 3 || text.front() != '(' || text.back() != ')')
        throw ParseError("bad requirement syntax: " + text);
    std::vector<Literal> lits;
    std::string body = text.substr(1, text.size() - 2);
    std::istringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ';')) lits.push_back(std::stoi(part));
    return Requirement(std::span<const Literal>{lits});
}

}  // namespace

LpSystem parse_native(std::istream& is) {
    LpSystem sys;
    std::string word;
    std::uint64_t vars = 0, rows = 0;
    if (!(is >> word) || word != "vars" || !(is >> vars) || !(is >> word) ||
        word != "rows" || !(is >> rows))
        throw ParseError("bad native header");
    if (!(is >> word) || word != "env")
        throw ParseError("missing env line");
    std::string kind;
    is >> kind >> sys.env.n >> sys.env.m;
    if (kind == "addition")
        sys.env.kind = EnvironmentKind::Addition;
    else if (kind == "shifted")
        sys.env.kind = EnvironmentKind::ShiftedAddition;
    else if (kind == "multiplication")
        sys.env.kind = EnvironmentKind::Multiplication;
    else
        throw ParseError("unknown environment " + kind);

    for (std::uint64_t i = 0; i < vars; ++i) {
        std::string tag, req;
        if (!(is >> tag >> req) || tag != "u")
            throw ParseError("expected unknown line");
        sys.unknowns.insert(parse_requirement(req));
    }
    sys.unknowns.freeze();
    if (sys.unknowns.size() != vars)
        throw ParseError("duplicate unknowns in table");

    std::string line;
    std::getline(is, line);  // finish current line
    std::uint64_t seen = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tag, kind_tok;
        ss >> tag >> kind_tok;
        if (tag != "row") throw ParseError("expected row line: " + line);
        auto k = io_detail::parse_kind(kind_tok);
        if (!k) throw ParseError("unknown row kind " + kind_tok);
        LinearConstraint row;
        row.kind = *k;
        std::string tok;
        bool at_rhs = false;
        while (ss >> tok) {
            if (tok == "=") {
                at_rhs = true;
                continue;
            }
            if (at_rhs) {
                row.rhs = Rational(tok);
                break;
            }
            auto star = tok.find('*');
            if (star == std::string::npos)
                throw ParseError("bad term " + tok);
            Rational coef(tok.substr(0, star));
            long id = std::stol(tok.substr(star + 1)) - 1;
            if (id < 0 || static_cast<std::uint64_t>(id) >= vars)
                throw ParseError("column id out of range in " + tok);
            row.terms.push_back({static_cast<UnknownId>(id), coef});
        }
        sys.constraints.push_back(std::move(row));
        ++seen;
    }
    if (seen != rows) throw ParseError("row count mismatch with header");
    return sys;
}

namespace {

// The industry LP text format takes decimals, not fractions.
std::string lp_number(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", q.convert_to<double>());
    return buf;
}

}  // namespace

void export_lp_format(const LpSystem& sys, std::ostream& os,
                      const std::vector<std::pair<UnknownId, Rational>>*
                          maximize_objective) {
    os << "Maximize\n obj:";
    if (maximize_objective && !maximize_objective->empty()) {
        for (const auto& [id, coef] : *maximize_objective) {
            os << (coef >= 0 ? " + " : " - ");
            os << lp_number(Rational(abs(coef))) << " x" << id + 1;
        }
    } else {
        os << " 0 x1";
    }
    os << "\nSubject To\n";
    std::size_t i = 0;
    for (const LinearConstraint& row : sys.constraints) {
        os << " c" << ++i << ':';
        for (const auto& term : row.terms) {
            os << (term.coef >= 0 ? " + " : " - ");
            os << lp_number(Rational(abs(term.coef))) << " x"
               << term.unknown + 1;
        }
        os << " = " << lp_number(row.rhs) << '\n';
    }
    // Default LP-format bounds are x >= 0, which is exactly the model.
    os << "End\n";
}

}  // namespace parith
