#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fgl/chern.hpp"
#include "fgl/errors.hpp"
#include "fgl/face.hpp"
#include "fgl/grading.hpp"
#include "fgl/series.hpp"

namespace fgl {

struct Component
{
    std::string name;
    bool quasiprojective = true;

    friend bool operator==(const Component&, const Component&) = default;
};

// Combinatorial model of an s.n.c. divisor D_1 + .. + D_r on a smooth ambient
// space: the components, the nonempty intersections D^J and the ambient
// dimension. Faces are pure of dimension ambient_dim - |J|.
class SncConfiguration
{
public:
    SncConfiguration() = default;
    SncConfiguration(int ambient_dim, std::vector<Component> components, std::set<Face> faces)
        : ambient_dim_(ambient_dim), components_(std::move(components)), faces_(std::move(faces))
    {
    }

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<Component>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    const std::set<Face>& faces() const { return faces_; }
    bool has_face(Face f) const { return faces_.contains(f); }
    int face_dimension(Face f) const { return ambient_dim_ - f.size(); }

    friend bool operator==(const SncConfiguration&, const SncConfiguration&) = default;

private:
    int ambient_dim_ = 0;
    std::vector<Component> components_;
    std::set<Face> faces_;
};

struct Violation
{
    std::string message;
    std::optional<Face> subset;
};

struct ValidationReport
{
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

// Checks index ranges, presence of all singletons, downward closure and
// nonnegative face dimensions.
ValidationReport validate_config(const SncConfiguration& config);

class InvalidConfiguration : public DomainError
{
public:
    explicit InvalidConfiguration(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

// Throws InvalidConfiguration carrying the report when validation fails.
void require_valid(const SncConfiguration& config);

using MultiplicityVector = std::vector<int>;

// sum_J i^J_*(entry_J . 1_{D^J}) over the faces of a configuration; the
// entry at J is a Chern polynomial on a base of dimension ambient_dim - |J|.
class FaceClassVector
{
public:
    explicit FaceClassVector(SncConfiguration config);

    const SncConfiguration& config() const { return config_; }
    const std::map<Face, ChernPolynomial>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    // Zero polynomial on the right base when the face carries nothing.
    ChernPolynomial entry(Face f) const;

    // Adds p at face f. p must have the face's dimension bound.
    void add(Face f, const ChernPolynomial& p);

    FaceClassVector& operator+=(const FaceClassVector& other);
    friend bool operator==(const FaceClassVector&, const FaceClassVector&) = default;

private:
    SncConfiguration config_;
    std::map<Face, ChernPolynomial> entries_;
};

// The class [D -> |D|] of D = sum n_i D_i.
FaceClassVector divisor_class(const SncConfiguration& config, const MultiplicityVector& n,
                              const FormalGroupLaw& law);

// The refined product [D . E -> |D| cap |E|] for D = sum n_i D_i and
// E = sum p_i D_i.
FaceClassVector product_class(const SncConfiguration& config, const MultiplicityVector& n,
                              const MultiplicityVector& p, const FormalGroupLaw& law);

struct Restriction
{
    SncConfiguration config;
    MultiplicityVector multiplicities;
    // original_index[k] is the 0-based index in the parent configuration of
    // component k of the restriction.
    std::vector<int> original_index;
    int restricted_to;
};

// The configuration induced on D_i: components D_j (j != i) meeting D_i,
// faces {J : J + {i} a face}, ambient dimension one less.
Restriction restrict_to_component(const SncConfiguration& config, int component,
                                  const MultiplicityVector& m);

// Transports a class on the restricted configuration back to the parent: face
// J goes to J + {i} and symbol c_k to c_{original_index[k]}.
FaceClassVector transport_from_restriction(const Restriction& restriction, const FaceClassVector& v,
                                           const SncConfiguration& parent);

// ch(O(sum n_i D_i)) applied to every face: multiplies the entry at J by F^n
// evaluated on that face.
FaceClassVector apply_divisor_operator(const FaceClassVector& v, const MultiplicityVector& n,
                                       const FormalGroupLaw& law);

// Rewrites c_j . 1_{D^J} (j not in J) to 1_{D^{J+j}} until every surviving
// monomial only involves symbols of its own face; faces missing from the
// configuration absorb to zero.
FaceClassVector normal_form(const FaceClassVector& v);

// Dimension of a class: a term c^e with coefficient of degree g at face J has
// dimension (ambient_dim - |J|) - |e| + g.
GradedDegree class_dimension(const FaceClassVector& v);

struct PropertyOutcome
{
    std::string name;
    enum class Status { Pass, Fail, Skipped } status;
    std::string detail;
};

// Symmetry, reduction to a component, normal-form agreement with the divisor
// operator and homogeneity of the product class for the pair (D, E).
std::vector<PropertyOutcome> check_properties(const SncConfiguration& config, const MultiplicityVector& d,
                                              const MultiplicityVector& e, const FormalGroupLaw& law);

} // namespace fgl
