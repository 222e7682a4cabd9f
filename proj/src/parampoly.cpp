#include "riordan/parampoly.hpp"

#include <sstream>
#include <stdexcept>

namespace riordan {

ParamPoly ParamPoly::param(int which) {
    if (which != 0 && which != 1) throw std::invalid_argument("parameter index must be 0 or 1");
    ParamPoly p;
    if (which == 0) {
        p.grid_ = {{}, {Rational(1)}};
        p.grid_[0].clear();
    } else {
        p.grid_ = {{Rational(0), Rational(1)}};
    }
    p.trim();
    return p;
}

bool ParamPoly::is_constant() const {
    if (grid_.empty()) return true;
    return grid_.size() == 1 && grid_[0].size() == 1;
}

Rational ParamPoly::constant_value() const {
    if (is_zero()) return {};
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return grid_[0][0];
}

int ParamPoly::deg_second() const {
    int d = -1;
    for (const auto& row : grid_) d = std::max(d, static_cast<int>(row.size()) - 1);
    return d;
}

Rational ParamPoly::coeff(int i, int j) const {
    if (i < 0 || j < 0) return {};
    if (i >= static_cast<int>(grid_.size())) return {};
    if (j >= static_cast<int>(grid_[i].size())) return {};
    return grid_[i][j];
}

void ParamPoly::trim() {
    for (auto& row : grid_)
        while (!row.empty() && row.back().is_zero()) row.pop_back();
    while (!grid_.empty() && grid_.back().empty()) grid_.pop_back();
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& row : r.grid_)
        for (auto& c : row) c = -c;
    return r;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r;
    r.grid_.resize(std::max(grid_.size(), o.grid_.size()));
    for (size_t i = 0; i < r.grid_.size(); ++i) {
        const auto* a = i < grid_.size() ? &grid_[i] : nullptr;
        const auto* b = i < o.grid_.size() ? &o.grid_[i] : nullptr;
        size_t w = std::max(a ? a->size() : 0, b ? b->size() : 0);
        r.grid_[i].assign(w, Rational());
        for (size_t j = 0; j < w; ++j) {
            if (a && j < a->size()) r.grid_[i][j] += (*a)[j];
            if (b && j < b->size()) r.grid_[i][j] += (*b)[j];
        }
    }
    r.trim();
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    ParamPoly r;
    size_t rows = grid_.size() + o.grid_.size() - 1;
    size_t cols = 0;
    for (const auto& a : grid_)
        for (const auto& b : o.grid_) cols = std::max(cols, a.size() + b.size());
    if (cols > 0) --cols;
    r.grid_.assign(rows, std::vector<Rational>(cols + 1, Rational()));
    for (size_t i1 = 0; i1 < grid_.size(); ++i1)
        for (size_t j1 = 0; j1 < grid_[i1].size(); ++j1) {
            if (grid_[i1][j1].is_zero()) continue;
            for (size_t i2 = 0; i2 < o.grid_.size(); ++i2)
                for (size_t j2 = 0; j2 < o.grid_[i2].size(); ++j2) {
                    if (o.grid_[i2][j2].is_zero()) continue;
                    r.grid_[i1 + i2][j1 + j2] += grid_[i1][j1] * o.grid_[i2][j2];
                }
        }
    r.trim();
    return r;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    ParamPoly r = *this;
    for (auto& row : r.grid_)
        for (auto& v : row) v *= c;
    return r;
}

ParamPoly ParamPoly::div_unit(const ParamPoly& u) const {
    if (!u.is_unit()) throw std::domain_error("polynomial division by a non-unit");
    return scaled(u.constant_value().inverse());
}

ParamPoly ParamPoly::pow(unsigned e) const {
    ParamPoly acc = ring_one();
    ParamPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Rational ParamPoly::eval(const Rational& x, const Rational& y) const {
    Rational out;
    Rational xp(1);
    for (const auto& row : grid_) {
        Rational yp(1);
        for (const auto& c : row) {
            if (!c.is_zero()) out += c * xp * yp;
            yp *= y;
        }
        xp *= x;
    }
    return out;
}

double ParamPoly::eval_double(double x, double y) const {
    double out = 0.0;
    double xp = 1.0;
    for (const auto& row : grid_) {
        double yp = 1.0;
        for (const auto& c : row) {
            out += c.to_double() * xp * yp;
            yp *= y;
        }
        xp *= x;
    }
    return out;
}

std::string ParamPoly::str(std::string_view xname, std::string_view yname) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < grid_.size(); ++i)
        for (size_t j = 0; j < grid_[i].size(); ++j) {
            const Rational& c = grid_[i][j];
            if (c.is_zero()) continue;
            Rational a = c.sign() < 0 ? -c : c;
            if (first) {
                if (c.sign() < 0) os << "-";
                first = false;
            } else {
                os << (c.sign() < 0 ? " - " : " + ");
            }
            bool has_var = i > 0 || j > 0;
            if (!a.is_one() || !has_var) {
                os << a.str();
                if (has_var) os << "*";
            }
            if (i > 0) {
                os << xname;
                if (i > 1) os << "^" << i;
            }
            if (j > 0) {
                if (i > 0) os << "*";
                os << yname;
                if (j > 1) os << "^" << j;
            }
        }
    return os.str();
}

}  // namespace riordan
