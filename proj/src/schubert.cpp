#include "weiercount/schubert.hpp"

#include <sstream>
#include <stdexcept>

namespace weiercount {

namespace {

using PlainPoly = std::map<std::pair<int, int>, Integer>;  // x1^i x2^j, unrestricted

PlainPoly to_plain(const std::map<std::pair<int, int>, Integer>& sym) {
    PlainPoly p;
    for (auto& [key, c] : sym) {
        auto [i, j] = key;
        p[{i, j}] += c;
        if (i != j) p[{j, i}] += c;
    }
    return p;
}

PlainPoly plain_mul(const PlainPoly& a, const PlainPoly& b) {
    PlainPoly r;
    for (auto& [ka, ca] : a)
        for (auto& [kb, cb] : b) r[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    return r;
}

std::map<std::pair<int, int>, Integer> symmetrize(const PlainPoly& p) {
    std::map<std::pair<int, int>, Integer> sym;
    for (auto& [key, c] : p) {
        if (c == 0) continue;
        auto [i, j] = key;
        if (i < j) continue;
        if (i != j) {
            auto it = p.find({j, i});
            if (it == p.end() || it->second != c)
                throw std::logic_error("ChernRootPoly: polynomial is not symmetric");
        }
        sym[{i, j}] = c;
    }
    return sym;
}

}  // namespace

void ChernRootPoly::add_monomial(int i, int j, const Integer& c) {
    if (i < j) std::swap(i, j);
    Integer& slot = coeffs_[{i, j}];
    slot += c;
    if (slot == 0) coeffs_.erase({i, j});
}

ChernRootPoly ChernRootPoly::product_of_roots(
    const std::vector<std::pair<Integer, Integer>>& roots) {
    PlainPoly p{{{0, 0}, Integer(1)}};
    for (auto& [c1, c2] : roots) {
        PlainPoly lin;
        if (c1 != 0) lin[{1, 0}] = c1;
        if (c2 != 0) lin[{0, 1}] = c2;
        p = plain_mul(p, lin);
    }
    ChernRootPoly out;
    out.coeffs_ = symmetrize(p);
    return out;
}

ChernRootPoly ChernRootPoly::schur(TwoRowPartition part) {
    if (part.a < part.b || part.b < 0)
        throw std::invalid_argument("ChernRootPoly::schur: need a >= b >= 0");
    ChernRootPoly out;
    for (int j = part.b; 2 * j <= part.a + part.b; ++j)
        out.coeffs_[{part.a + part.b - j, j}] = 1;
    return out;
}

ChernRootPoly ChernRootPoly::operator*(const ChernRootPoly& o) const {
    ChernRootPoly out;
    out.coeffs_ = symmetrize(plain_mul(to_plain(coeffs_), to_plain(o.coeffs_)));
    return out;
}

ChernRootPoly ChernRootPoly::operator+(const ChernRootPoly& o) const {
    ChernRootPoly out = *this;
    for (auto& [key, c] : o.coeffs_) out.add_monomial(key.first, key.second, c);
    return out;
}

ChernRootPoly ChernRootPoly::operator-(const ChernRootPoly& o) const {
    ChernRootPoly out = *this;
    for (auto& [key, c] : o.coeffs_) out.add_monomial(key.first, key.second, -c);
    return out;
}

SchubertClass::SchubertClass(int ambient_m) : m_(ambient_m) {
    if (ambient_m < 1) throw std::invalid_argument("SchubertClass: ambient m must be >= 1");
}

SchubertClass SchubertClass::sigma(int ambient_m, int a, int b, Integer coeff) {
    if (a < b || b < 0) throw std::invalid_argument("SchubertClass::sigma: need a >= b >= 0");
    if (a > ambient_m)
        throw std::invalid_argument("SchubertClass::sigma: partition exceeds the ambient box");
    SchubertClass out(ambient_m);
    if (coeff != 0) out.terms_[{a, b}] = std::move(coeff);
    return out;
}

SchubertClass SchubertClass::from_roots(int ambient_m, const ChernRootPoly& poly) {
    SchubertClass out(ambient_m);
    auto work = poly.coeffs_;
    while (!work.empty()) {
        // peel the term with the largest first index; its Schur expansion leads with itself
        auto it = std::prev(work.end());
        auto [i, j] = it->first;
        Integer c = it->second;
        ChernRootPoly s = ChernRootPoly::schur({i, j});
        for (auto& [key, sc] : s.coeffs_) {
            Integer& slot = work[key];
            slot -= c * sc;
            if (slot == 0) work.erase(key);
        }
        if (i <= ambient_m && c != 0) out.terms_[{i, j}] += c;
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Integer SchubertClass::coeff(TwoRowPartition p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Integer(0) : it->second;
}

SchubertClass SchubertClass::operator+(const SchubertClass& o) const {
    if (m_ != o.m_) throw std::invalid_argument("SchubertClass: ambient mismatch");
    SchubertClass out = *this;
    for (auto& [p, c] : o.terms_) {
        Integer& slot = out.terms_[p];
        slot += c;
        if (slot == 0) out.terms_.erase(p);
    }
    return out;
}

SchubertClass SchubertClass::operator-(const SchubertClass& o) const {
    return *this + (o * Integer(-1));
}

SchubertClass SchubertClass::operator*(const Integer& c) const {
    SchubertClass out(m_);
    if (c == 0) return out;
    for (auto& [p, t] : terms_) out.terms_[p] = t * c;
    return out;
}

SchubertClass SchubertClass::operator*(const SchubertClass& o) const {
    if (m_ != o.m_) throw std::invalid_argument("SchubertClass: ambient mismatch");
    SchubertClass out(m_);
    for (auto& [p, cp] : terms_) {
        for (auto& [r, cr] : o.terms_) {
            ChernRootPoly prod = ChernRootPoly::schur(p) * ChernRootPoly::schur(r);
            SchubertClass piece = from_roots(m_, prod);
            out = out + piece * (cp * cr);
        }
    }
    return out;
}

Integer SchubertClass::integrate() const {
    return coeff({m_, m_});
}

bool SchubertClass::homogeneous_of_codim(int codim) const {
    for (auto& [p, c] : terms_)
        if (p.a + p.b != codim) return false;
    return true;
}

std::string SchubertClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Integer c = it->second;
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (c != 1) out << c.get_str() << "*";
        out << "s[" << it->first.a << "," << it->first.b << "]";
        first = false;
    }
    return out.str();
}

SchubertClass fano_class(int m, int d) {
    if (m < 2 || d < 1 || 2 * m - d < 1)
        throw std::invalid_argument("fano_class: need m >= 2, d >= 1, 2m - d >= 1");
    std::vector<std::pair<Integer, Integer>> roots;
    for (int i = 0; i <= d; ++i) roots.emplace_back(i, d - i);
    return SchubertClass::from_roots(m, ChernRootPoly::product_of_roots(roots));
}

SchubertClass hodge_bundle_chern(int k, int m) {
    if (k < 2 || k > 4) throw std::invalid_argument("hodge_bundle_chern: k must be in 2..4");
    if (m < 2) throw std::invalid_argument("hodge_bundle_chern: m must be >= 2");
    // roots of Sym^{k-2}(S^v), each shifted by sigma_1 = x1 + x2 for the O(sigma_1) twist
    std::vector<std::pair<Integer, Integer>> roots;
    for (int i = 0; i <= k - 2; ++i) roots.emplace_back(k - 1 - i, i + 1);
    return SchubertClass::from_roots(m, ChernRootPoly::product_of_roots(roots));
}

}  // namespace weiercount
