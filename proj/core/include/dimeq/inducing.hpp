#pragma once

#include <span>
#include <string>
#include <vector>

#include "dimeq/catalog.hpp"
#include "dimeq/solver_types.hpp"

namespace dimeq {

struct InduceResult {
  Partition orbit;
  bool valid;  // diagnostic: whether the plain sum is a valid orbit partition
};

/// Orbit of an Eisenstein series from a two-block Levi: GL -> tau1 + tau2;
/// GSp/GSO -> 2*tau1 + tau2. The sum is returned as-is; `valid` flags whether
/// it satisfies the family's partition constraint (plain addition without a
/// collapse; the classified targets never need one).
InduceResult induce(GroupFamily family, const Partition& tau1, const Partition& tau2);

/// One way of building an Eisenstein series with a prescribed two-row orbit:
/// the Levi's GL block size, the orbit on it, and the orbit on the
/// complementary block (a GL block for GL targets; a smaller group of the same
/// type for GSp/GSO, possibly trivial with an empty orbit).
struct InducingDatum {
  GroupFamily group;
  Partition target;
  int gl_block;
  Partition tau1;
  Partition tau2;

  int ambient_size() const;
  int other_block() const;  // GL: complementary GL block; GSp/GSO: its ambient size
  /// Block-data parameters (a, i): a is the first row of tau1; i measures the
  /// parity offset of the GL block, gl_block = 2(a - c) + i for a target
  /// ((p+c)(p-c)) and gl_block = 2a - i for the GSp/GSO targets.
  int a() const { return tau1.part(0); }
  int i() const;

  friend bool operator==(const InducingDatum&, const InducingDatum&) = default;
  friend bool operator<(const InducingDatum& x, const InducingDatum& y);
  std::string to_string() const;
};

/// Exhaustive search over all Levi splits and all two-row orbits per block
/// whose induced sum equals `target`. Target must have at most two rows and be
/// valid for the group; GL targets live in GL_{|target|}, GSp targets in
/// GSp_{2N} with 2N = |target|, GSO in GSO_{|target|}. Throws
/// std::invalid_argument otherwise.
std::vector<InducingDatum> classify_inducing_data(GroupFamily group, const Partition& target);

/// The stated closed-form families for the six classified targets
/// ((p+c)(p-c)) over GL_2p and ((2p+2c)(2p+2-2c))-type targets over GSp/GSO,
/// c = 1, 2. Produces the same set as the brute force; kept separate so the
/// two can be compared.
std::vector<InducingDatum> closed_form_inducing_data(GroupFamily group, const Partition& target);

/// dim(induced orbit)/2 == dim(tau1)/2 + dim(tau2)/2 + dim U(P), with U(P) the
/// radical of the two-block parabolic.
bool induced_dim_identity(const InducingDatum& datum);
/// Positive roots of the ambient classical group outside the two-block Levi.
int classical_parabolic_radical_dim(GroupFamily group, int ambient, int gl_block);

/// How an Eisenstein series is built by stages: ordered GL block sizes for the
/// classical families (plus the residual classical group, implied), or the
/// retained simple roots of the maximal parabolic's Levi for GE7.
struct EisensteinDescriptor {
  GroupFamily family;
  std::vector<int> gl_blocks;
  std::vector<int> ge7_levi;  // 1-based simple-root indices, 6 of the 7

  std::string to_string() const;
};

/// Classical: some GL block size is odd. GE7: the Levi misses at least one of
/// alpha_2, alpha_5, alpha_7.
bool is_odd(const EisensteinDescriptor& descriptor);

/// Two-stage descriptors consistent with the slot's orbit: classical slots get
/// one descriptor per inducing datum; GE7 slots get the realizable maximal
/// Levis. Cuspidal slots get none.
std::vector<EisensteinDescriptor> descriptor_options(const Slot& slot);

/// Nonvanishing label for m = 2 rows: nonzero_unipotent iff at least one slot
/// admits an odd descriptor among the supplied options, not_unipotent
/// otherwise; rows with m != 2 stay unknown. `options_per_slot` must align
/// with row.slots; descriptors are checked against each slot's orbit and an
/// inconsistent one throws std::invalid_argument.
SolutionRow label_row(SolutionRow row,
                      std::span<const std::vector<EisensteinDescriptor>> options_per_slot);

}  // namespace dimeq
