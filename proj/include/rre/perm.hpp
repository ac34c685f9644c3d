/**
 * @file perm.hpp
 * @brief Permutations on points 0..n-1 with cycle-notation I/O.
 *
 * Products compose left-to-right: x^(a*b) = (x^a)^b, matching the
 * exponent-style action used throughout the group machinery, so the
 * conjugate a^t is t^-1 * a * t.
 */
#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rre {

class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || static_cast<size_t>(v) >= img_.size() || seen[static_cast<size_t>(v)])
                throw std::invalid_argument("Perm: images are not a bijection");
            seen[static_cast<size_t>(v)] = true;
        }
    }

    static Perm identity(size_t n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return Perm(std::move(v));
    }

    size_t degree() const { return img_.size(); }
    int apply(int x) const { return img_[static_cast<size_t>(x)]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != static_cast<int>(i)) return false;
        return true;
    }

    friend Perm operator*(const Perm& a, const Perm& b) {
        if (a.degree() != b.degree()) throw std::invalid_argument("Perm: degree mismatch");
        std::vector<int> v(a.degree());
        for (size_t i = 0; i < v.size(); ++i) v[i] = b.img_[static_cast<size_t>(a.img_[i])];
        Perm p;
        p.img_ = std::move(v);
        return p;
    }

    Perm inverse() const {
        std::vector<int> v(img_.size());
        for (size_t i = 0; i < img_.size(); ++i) v[static_cast<size_t>(img_[i])] = static_cast<int>(i);
        Perm p;
        p.img_ = std::move(v);
        return p;
    }

    Perm conj(const Perm& t) const { return t.inverse() * (*this) * t; }

    Perm pow(long e) const {
        Perm base = e < 0 ? inverse() : *this;
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        Perm r = identity(degree());
        while (k) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    size_t order() const {
        Perm p = *this;
        size_t n = 1;
        while (!p.is_identity()) {
            p = p * (*this);
            ++n;
        }
        return n;
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

    std::string cycle_string() const {
        std::string out;
        std::vector<bool> seen(img_.size(), false);
        for (size_t i = 0; i < img_.size(); ++i) {
            if (seen[i] || img_[i] == static_cast<int>(i)) continue;
            out += "(";
            size_t j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) out += " ";
                out += std::to_string(j);
                first = false;
                j = static_cast<size_t>(img_[j]);
            }
            out += ")";
        }
        return out.empty() ? "()" : out;
    }

private:
    std::vector<int> img_;
};

/// Parse cycle notation, e.g. "(0 1 2)(3 4)" or "()"; commas also accepted.
inline Perm parse_perm(const std::string& text, size_t degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
    };
    skip();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("parse_perm: expected '('");
        ++pos;
        std::vector<int> cycle;
        skip();
        while (pos < text.size() && text[pos] != ')') {
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("parse_perm: expected point");
            int v = std::stoi(text.substr(start, pos - start));
            if (v < 0 || static_cast<size_t>(v) >= degree)
                throw std::invalid_argument("parse_perm: point out of range");
            cycle.push_back(v);
            skip();
        }
        if (pos == text.size()) throw std::invalid_argument("parse_perm: missing ')'");
        ++pos;
        for (size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
            img[static_cast<size_t>(from)] = to;
        }
        skip();
    }
    return Perm(std::move(img));
}

}  // namespace rre
