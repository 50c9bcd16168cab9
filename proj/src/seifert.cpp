#include "knotconc/seifert.hpp"

#include <fstream>
#include <sstream>

namespace knotconc {

SeifertMatrix SeifertMatrix::validate(const IntMatrix& a) {
    if (!a.is_square() || a.rows() % 2 != 0)
        fail(Errc::OddDimension, "Seifert matrix must be square of even dimension, got " +
                                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    // skew unimodular pairing has determinant exactly +1
    if (det(a.transpose() - a) != 1)
        fail(Errc::NotUnimodularIntersection,
             "det(A^t - A) = " + det(a.transpose() - a).get_str() + ", expected 1");
    return SeifertMatrix(a);
}

Int SeifertMatrix::form(const std::vector<Int>& x, const std::vector<Int>& y) const {
    if (x.size() != dim() || y.size() != dim()) fail(Errc::Internal, "form: vector length mismatch");
    Int r = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j) r += x[i] * a_.at(i, j) * y[j];
    }
    return r;
}

AlexanderPoly alexander(const SeifertMatrix& s) {
    std::size_t n = s.dim();
    PolyMatrix m(n, n);
    const IntMatrix& a = s.matrix();
    IntMatrix at = a.transpose();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = IntPoly({a.at(i, j), -at.at(i, j)});
    return AlexanderPoly{det(m)};
}

IntMatrix monodromy(const SeifertMatrix& s) {
    if (s.genus() == 0) fail(Errc::EmptyMatrix, "monodromy of a genus-0 matrix");
    const IntMatrix& a = s.matrix();
    IntMatrix at = a.transpose();
    return unimodular_inverse(at - a) * at;
}

SeifertMatrix block_sum(const std::vector<std::pair<SeifertMatrix, unsigned long>>& parts) {
    std::vector<IntMatrix> blocks;
    for (const auto& [s, mult] : parts) {
        if (mult == 0) fail(Errc::ZeroMultiplicity, "block_sum multiplicity must be >= 1");
        for (unsigned long i = 0; i < mult; ++i) blocks.push_back(s.matrix());
    }
    return SeifertMatrix::validate(IntMatrix::block_diagonal(blocks));
}

bool alexander_coprime(const SeifertMatrix& s1, const SeifertMatrix& s2) {
    // powers of t are units in Q[t, 1/t]
    IntPoly p1 = alexander(s1).poly.laurent_reduced();
    IntPoly p2 = alexander(s2).poly.laurent_reduced();
    RatPoly g = poly_gcd(RatPoly(p1), RatPoly(p2));
    return g.is_constant();
}

bool is_nonsingular(const SeifertMatrix& s) { return sgn(det(s.matrix())) != 0 || s.dim() == 0; }

SeifertMatrix parse_seifert(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<Int>> rows;
    std::size_t lineno = 0, width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        std::vector<Int> row;
        std::string tok;
        while (ls >> tok) {
            Int v;
            if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
                fail(Errc::ParseError, "parse error at line " + std::to_string(lineno) +
                                           ": bad integer '" + tok + "'");
            row.push_back(v);
        }
        if (rows.empty()) {
            width = row.size();
        } else if (row.size() != width) {
            fail(Errc::ParseError, "parse error at line " + std::to_string(lineno) + ": row has " +
                                       std::to_string(row.size()) + " entries, expected " +
                                       std::to_string(width));
        }
        rows.push_back(std::move(row));
    }
    IntMatrix m(rows.size(), rows.empty() ? 0 : width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) m.at(i, j) = rows[i][j];
    return SeifertMatrix::validate(m);
}

std::string emit_seifert(const SeifertMatrix& s, const std::string& comment) {
    std::ostringstream os;
    if (!comment.empty()) os << "# " << comment << "\n";
    for (std::size_t i = 0; i < s.dim(); ++i) {
        for (std::size_t j = 0; j < s.dim(); ++j) os << (j ? " " : "") << s.matrix().at(i, j).get_str();
        os << "\n";
    }
    return os.str();
}

SeifertMatrix read_seifert_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_seifert(buf.str());
}

} // namespace knotconc
