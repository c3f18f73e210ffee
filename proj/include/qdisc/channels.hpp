#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qdisc/bloch.hpp"
#include "qdisc/matrixkit.hpp"

namespace qdisc {

enum class ChannelKind { kNone, kPhaseDamping, kPhaseFlip, kBitFlip };

/// CLI names: none, phase-damping, phase-flip, bit-flip.
std::string_view to_string(ChannelKind kind);
ChannelKind parse_channel_kind(std::string_view name);

class DecayProbability {
 public:
  explicit DecayProbability(double k);
  double value() const noexcept { return k_; }

 private:
  double k_;
};

struct KrausChannel {
  ChannelKind kind = ChannelKind::kNone;
  std::vector<ComplexMatrix> ops;
};

/// max |sum_i E_i^dagger E_i - I|
double completeness_defect(const KrausChannel& ch);

KrausChannel identity_channel();
/// {diag(1, sqrt(1-k)), diag(0, sqrt(k))}
KrausChannel phase_damping(DecayProbability k);
/// {sqrt(1-k) I, sqrt(k) sigma3}
KrausChannel phase_flip(DecayProbability k);
/// {sqrt(1-k) I, sqrt(k) sigma1}
KrausChannel bit_flip(DecayProbability k);
/// k is ignored for ChannelKind::kNone.
KrausChannel make_channel(ChannelKind kind, DecayProbability k);

/// Affine single-qubit Bloch map v -> scale * v + shift (componentwise).
struct BlochTransfer1Q {
  Vec3 scale{1.0, 1.0, 1.0};
  Vec3 shift{};

  PauliTransfer as_pauli_transfer() const;
};

/// Derived from the Kraus operators by conjugating the Pauli basis. Throws
/// std::invalid_argument for an incomplete channel or one whose Bloch action
/// is not diagonal.
BlochTransfer1Q bloch_transfer(const KrausChannel& ch);

/// sum_ij (E_i (x) F_j) rho (E_i (x) F_j)^dagger on a 4x4 density matrix.
ComplexMatrix apply_kraus(const KrausChannel& ch_a, const KrausChannel& ch_b,
                          const ComplexMatrix& rho);

/// Bloch-level local channel action: x -> scale_a * x + shift_a, and so on.
TwoQubitBloch apply_local(const KrausChannel& ch_a, const KrausChannel& ch_b,
                          const TwoQubitBloch& s);

}  // namespace qdisc
