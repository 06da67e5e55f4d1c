#pragma once

#include <cassert>
#include <string>

namespace fgl {

// Result of a homogeneity query. The zero element is compatible with every
// degree and reports Any.
class GradedDegree
{
public:
    enum class Kind { Any, Homogeneous, Inhomogeneous };

    static GradedDegree any() { return GradedDegree(Kind::Any, 0); }
    static GradedDegree of(int degree) { return GradedDegree(Kind::Homogeneous, degree); }
    static GradedDegree inhomogeneous() { return GradedDegree(Kind::Inhomogeneous, 0); }

    Kind kind() const { return kind_; }
    bool is_any() const { return kind_ == Kind::Any; }
    bool is_homogeneous() const { return kind_ == Kind::Homogeneous; }
    bool is_inhomogeneous() const { return kind_ == Kind::Inhomogeneous; }

    int value() const
    {
        assert(is_homogeneous());
        return degree_;
    }

    // True when the element may be regarded as homogeneous of degree d.
    bool matches(int d) const { return is_any() || (is_homogeneous() && degree_ == d); }

    // Fold in one more term of degree d.
    GradedDegree combine(int d) const
    {
        switch (kind_) {
        case Kind::Any: return of(d);
        case Kind::Homogeneous: return degree_ == d ? *this : inhomogeneous();
        default: return *this;
        }
    }

    GradedDegree combine(const GradedDegree& other) const
    {
        if (other.is_any())
            return *this;
        if (other.is_inhomogeneous())
            return inhomogeneous();
        return combine(other.value());
    }

    std::string to_string() const
    {
        switch (kind_) {
        case Kind::Any: return "any";
        case Kind::Homogeneous: return std::to_string(degree_);
        default: return "inhomogeneous";
        }
    }

    friend bool operator==(const GradedDegree&, const GradedDegree&) = default;

private:
    GradedDegree(Kind k, int d) : kind_(k), degree_(d) {}

    Kind kind_;
    int degree_;
};

} // namespace fgl
