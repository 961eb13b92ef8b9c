#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isct/matrix.hpp"
#include "isct/singularity.hpp"

namespace isct {

// Finite presentation of a perverse sheaf on a projective hypersurface with
// one isolated singular point, in the MacPherson-Vilonen style: a rank-0 or
// rank-1 local system on the smooth part together with a four-term sequence
//
//   V-  --alpha-->  A  --beta-->  B  --gamma-->  V+
//
// of rational vector spaces, exact at A and at B. V-/V+ are the boundary
// (link) cohomology of the local system; rank-0 objects are supported at
// the singular point and have no boundary terms.
struct ZigZag {
  int loc_rank = 0;  // 0 or 1
  std::size_t dim_v_minus = 0;
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
  std::size_t dim_v_plus = 0;
  RationalMatrix alpha;  // dim_a x dim_v_minus
  RationalMatrix beta;   // dim_b x dim_a
  RationalMatrix gamma;  // dim_v_plus x dim_b

  bool operator==(const ZigZag&) const = default;
};

// A morphism of zig-zags. The map of rank <= 1 local systems is a scalar;
// functorially it induces scalar * id on the boundary terms, so only the
// scalar and the two middle maps are free data. If either endpoint has
// loc_rank 0 the scalar is constrained to 0.
struct ZigZagMorphism {
  ZigZag source;
  ZigZag target;
  Rational scalar = 0;
  RationalMatrix p_a;  // target.dim_a x source.dim_a
  RationalMatrix p_b;  // target.dim_b x source.dim_b
};

struct ValidationReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// Checks both exactness conditions exactly (image(alpha) = kernel(beta) and
// image(beta) = kernel(gamma), each by mutual containment). Shape
// inconsistencies throw input_error.
ValidationReport validate(const ZigZag& z);

// Commuting-square check for a morphism, including the scalar constraints.
bool is_valid_morphism(const ZigZagMorphism& m);
bool is_isomorphism(const ZigZagMorphism& m);

ZigZagMorphism identity_morphism(const ZigZag& z);
ZigZagMorphism compose(const ZigZagMorphism& g, const ZigZagMorphism& f);  // g after f
bool morphism_equal(const ZigZagMorphism& a, const ZigZagMorphism& b);

// Zig-zag of the nearby-cycle complex of the smoothing family: both middle
// spaces model the middle cohomology of the Milnor fiber (rel. boundary on
// the A side), beta = T - 1 in the model basis, alpha a kernel basis of
// beta, gamma the projection onto its cokernel.
ZigZag nearby_zigzag(const MonodromyData& md);

struct VanishingImage {
  ZigZag c;             // supported at the singular point: (0, A, B) with A = B = image(T-1)
  ZigZagMorphism iota;  // componentwise-injective inclusion into nearby_zigzag(md)
};

// Zig-zag of the image of T - 1 on vanishing cycles, with its inclusion
// into the nearby zig-zag. Requires the monodromy to be semisimple in the
// eigenvalue 1 (automatic for the companion-block model).
VanishingImage vanishing_image_zigzag(const MonodromyData& md);

struct CokernelResult {
  ZigZag is;            // the intersection-space zig-zag: quotient slots, beta = 0
  ZigZagMorphism proj;  // componentwise quotient morphism from iota.target
};

// Cokernel of iota in the zig-zag category. Verifies, rather than assumes,
// that the induced middle map vanishes and the induced outer maps are
// isomorphisms, and that the three-term columns of the resulting diagram
// are exact; any failure is a theorem_violation.
CokernelResult cokernel_zigzag(const ZigZagMorphism& iota);

// Verdier duality at the zig-zag level: reverse the four-term sequence and
// transpose the maps.
ZigZag dual_zigzag(const ZigZag& z);

// Basis of the space of morphisms z1 -> z2, obtained from the kernel of the
// stacked commuting-square system in the unknowns (scalar, p_a, p_b).
std::vector<ZigZagMorphism> hom_space(const ZigZag& z1, const ZigZag& z2);

// Deterministic search for an isomorphism z1 -> z2: each hom-space basis
// morphism in order, then integer combinations with coefficients in
// {-2..2}. Returns nullopt when the search is exhausted.
std::optional<ZigZagMorphism> find_isomorphism(const ZigZag& z1, const ZigZag& z2);

// Splitting sigma with sigma after iota = identity, built by the
// constructive recipe: a kernel basis of beta goes to 0, the included image
// basis goes back to its preimage, deterministic basis extensions go to 0.
// Verifies the retraction and the commutation exactly.
ZigZagMorphism construct_splitting(const ZigZagMorphism& iota);

// dim Hom of the perverse sheaves presented by the zig-zags:
// dim hom_space + dim coker(beta_1) * dim ker(beta_2).
long long perverse_hom_dimension(const ZigZag& z1, const ZigZag& z2);

// Everything the report and CLI need about one germ's zig-zags.
struct ZigZagBundle {
  ZigZag nearby;
  ZigZag c;
  ZigZag is;
  ZigZagMorphism iota;
  ZigZagMorphism proj;
};

ZigZagBundle build_zigzags(const MonodromyData& md);

}  // namespace isct
