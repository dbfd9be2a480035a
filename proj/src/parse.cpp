#include "adyn/parse.hpp"

#include <cctype>
#include <map>

namespace adyn {

namespace {

struct Cursor {
    const std::string& src;
    size_t pos = 0;

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= src.size();
    }
    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw error("parse error at position " + std::to_string(pos) + ": " + what);
    }
    mpz_class integer() {
        skip_ws();
        size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return mpz_class(src.substr(start, pos - start));
    }
};

struct Term {
    Scalar coeff;
    int xexp = 0, yexp = 0;
};

// term := factor ('*'? factor)*, factor := rational | var ('^' int)?
Term parse_term(Cursor& cur, Field f, bool homogeneous) {
    Term t{one(f)};
    bool first = true;
    while (!cur.eof()) {
        char c = cur.peek();
        if (c == '+' || c == '-') break;
        if (c == '*') {
            ++cur.pos;
            c = cur.peek();
        } else if (!first && !std::isdigit(static_cast<unsigned char>(c)) &&
                   c != 'X' && c != 'Y' && c != 'x') {
            cur.fail(std::string("unexpected character '") + c + "'");
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = cur.integer();
            mpz_class den = 1;
            if (cur.peek() == '/') {
                ++cur.pos;
                den = cur.integer();
                if (den == 0) cur.fail("zero denominator");
            }
            t.coeff *= Scalar(mpq_class(num, den), f);
        } else if (c == 'X' || c == 'Y' || c == 'x') {
            if (homogeneous && c == 'x') cur.fail("use X and Y in homogeneous mode");
            if (!homogeneous && c != 'x') cur.fail("use lowercase x in affine mode");
            ++cur.pos;
            int e = 1;
            if (cur.peek() == '^') {
                ++cur.pos;
                mpz_class ez = cur.integer();
                if (ez < 0 || ez > 64) cur.fail("exponent out of range");
                e = int(ez.get_si());
            }
            if (c == 'Y')
                t.yexp += e;
            else
                t.xexp += e;
        } else {
            cur.fail(std::string("unexpected character '") + c + "'");
        }
        first = false;
    }
    if (first) cur.fail("empty term");
    return t;
}

std::vector<Term> parse_terms(const std::string& src, Field f, bool homogeneous) {
    Cursor cur{src};
    std::vector<Term> terms;
    bool negate = false;
    if (cur.eof()) cur.fail("empty input");
    if (cur.peek() == '-') {
        negate = true;
        ++cur.pos;
    } else if (cur.peek() == '+') {
        ++cur.pos;
    }
    while (true) {
        Term t = parse_term(cur, f, homogeneous);
        if (negate) t.coeff = -t.coeff;
        terms.push_back(t);
        if (cur.eof()) break;
        char c = cur.peek();
        if (c == '+')
            negate = false;
        else if (c == '-')
            negate = true;
        else
            cur.fail(std::string("expected + or -, got '") + c + "'");
        ++cur.pos;
    }
    return terms;
}

}  // namespace

Scalar parse_scalar(const std::string& src, Field f) {
    Cursor cur{src};
    bool neg = false;
    if (cur.peek() == '-') {
        neg = true;
        ++cur.pos;
    }
    mpz_class num = cur.integer();
    mpz_class den = 1;
    if (cur.peek() == '/') {
        ++cur.pos;
        den = cur.integer();
        if (den == 0) cur.fail("zero denominator");
    }
    if (!cur.eof()) cur.fail("trailing characters in number");
    if (neg) num = -num;
    return Scalar(mpq_class(num, den), f);
}

ProjPoint parse_point(const std::string& src, Field f) {
    Cursor cur{src};
    cur.skip_ws();
    if (src.substr(cur.pos, 3) == "inf") return ProjPoint::infinity(f);
    return ProjPoint::affine(parse_scalar(src, f));
}

BiForm parse_biform(const std::string& src, Field f) {
    auto terms = parse_terms(src, f, true);
    int d = terms[0].xexp + terms[0].yexp;
    for (const auto& t : terms)
        if (t.xexp + t.yexp != d)
            throw error("not homogeneous: term of degree " + std::to_string(t.xexp + t.yexp) +
                        " next to degree " + std::to_string(d));
    std::vector<Scalar> coeffs(size_t(d) + 1, zero(f));
    for (const auto& t : terms) coeffs[size_t(d - t.xexp)] += t.coeff;
    bool nz = false;
    for (const auto& c : coeffs) nz = nz || !c.is_zero();
    if (!nz) throw error("zero polynomial");
    return BiForm(std::move(coeffs), f);
}

UniPoly parse_unipoly(const std::string& src, Field f) {
    auto terms = parse_terms(src, f, false);
    int d = 0;
    for (const auto& t : terms) {
        if (t.yexp != 0) throw error("Y not allowed in affine mode");
        d = std::max(d, t.xexp);
    }
    std::vector<Scalar> coeffs(size_t(d) + 1, zero(f));
    for (const auto& t : terms) coeffs[size_t(t.xexp)] += t.coeff;
    UniPoly p(std::move(coeffs), f);
    if (p.is_zero()) throw error("zero polynomial");
    return p;
}

}  // namespace adyn
