#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace weightprop {

// Integer vector with a phantom tag so weights and multidegrees cannot be mixed up.
template <class Tag>
class ZVector {
public:
    ZVector() = default;
    explicit ZVector(std::size_t n) : v_(n, 0) {}
    explicit ZVector(std::vector<std::int64_t> v) : v_(std::move(v)) {}
    ZVector(std::initializer_list<std::int64_t> il) : v_(il) {}

    std::size_t size() const { return v_.size(); }
    std::int64_t operator[](std::size_t i) const { return v_[i]; }
    std::int64_t& operator[](std::size_t i) { return v_[i]; }
    const std::vector<std::int64_t>& values() const { return v_; }

    bool is_zero() const {
        for (auto x : v_)
            if (x != 0) return false;
        return true;
    }

    ZVector& operator+=(const ZVector& o) {
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    ZVector& operator-=(const ZVector& o) {
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    friend ZVector operator+(ZVector a, const ZVector& b) { return a += b; }
    friend ZVector operator-(ZVector a, const ZVector& b) { return a -= b; }
    friend ZVector operator-(ZVector a) {
        for (auto& x : a.v_) x = -x;
        return a;
    }
    ZVector& scale_add(std::int64_t k, const ZVector& o) {
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += k * o.v_[i];
        return *this;
    }

    friend bool operator==(const ZVector&, const ZVector&) = default;
    // Lexicographic; used for containers, not as a grading order.
    friend auto operator<=>(const ZVector&, const ZVector&) = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v_[i]);
        }
        return s + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const ZVector& z) { return os << z.str(); }

private:
    std::vector<std::int64_t> v_;
};

struct WeightTag {};
struct DegreeTag {};
using Weight = ZVector<WeightTag>;
using Multidegree = ZVector<DegreeTag>;

}  // namespace weightprop
