#include "qdisc/channels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdisc {

namespace {

constexpr double kCompletenessTol = 1e-12;
constexpr double kOffDiagonalTol = 1e-12;

void require_complete(const KrausChannel& ch, const char* where) {
  if (ch.ops.empty()) throw std::invalid_argument(std::string(where) + ": channel has no operators");
  for (const auto& op : ch.ops) {
    if (op.dim() != 2) {
      throw std::invalid_argument(std::string(where) + ": Kraus operators must be 2x2");
    }
  }
  const double defect = completeness_defect(ch);
  if (defect > kCompletenessTol) {
    throw std::invalid_argument(std::string(where) + ": Kraus operators are not complete (defect " +
                                std::to_string(defect) + ")");
  }
}

ComplexMatrix conjugate(const KrausChannel& ch, const ComplexMatrix& op) {
  ComplexMatrix out(op.dim());
  for (const auto& e : ch.ops) out += e * op * e.adjoint();
  return out;
}

}  // namespace

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kNone: return "none";
    case ChannelKind::kPhaseDamping: return "phase-damping";
    case ChannelKind::kPhaseFlip: return "phase-flip";
    case ChannelKind::kBitFlip: return "bit-flip";
  }
  return "none";
}

ChannelKind parse_channel_kind(std::string_view name) {
  for (auto kind : {ChannelKind::kNone, ChannelKind::kPhaseDamping, ChannelKind::kPhaseFlip,
                    ChannelKind::kBitFlip}) {
    if (name == to_string(kind)) return kind;
  }
  throw std::invalid_argument("unknown channel '" + std::string(name) +
                              "' (expected none, phase-damping, phase-flip, bit-flip)");
}

DecayProbability::DecayProbability(double k) : k_(k) {
  if (!(k >= 0.0 && k <= 1.0)) {
    throw std::invalid_argument("DecayProbability: k must lie in [0, 1], got " + std::to_string(k));
  }
}

double completeness_defect(const KrausChannel& ch) {
  ComplexMatrix sum(2);
  for (const auto& e : ch.ops) sum += e.adjoint() * e;
  return max_abs_diff(sum, ComplexMatrix::identity(2));
}

KrausChannel identity_channel() {
  return {ChannelKind::kNone, {ComplexMatrix::identity(2)}};
}

KrausChannel phase_damping(DecayProbability k) {
  const double kv = k.value();
  return {ChannelKind::kPhaseDamping,
          {ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - kv)}},
           ComplexMatrix{{0.0, 0.0}, {0.0, std::sqrt(kv)}}}};
}

KrausChannel phase_flip(DecayProbability k) {
  const double kv = k.value();
  return {ChannelKind::kPhaseFlip,
          {ComplexMatrix::identity(2) * Complex{std::sqrt(1.0 - kv)},
           sigma(3) * Complex{std::sqrt(kv)}}};
}

KrausChannel bit_flip(DecayProbability k) {
  const double kv = k.value();
  return {ChannelKind::kBitFlip,
          {ComplexMatrix::identity(2) * Complex{std::sqrt(1.0 - kv)},
           sigma(1) * Complex{std::sqrt(kv)}}};
}

KrausChannel make_channel(ChannelKind kind, DecayProbability k) {
  switch (kind) {
    case ChannelKind::kNone: return identity_channel();
    case ChannelKind::kPhaseDamping: return phase_damping(k);
    case ChannelKind::kPhaseFlip: return phase_flip(k);
    case ChannelKind::kBitFlip: return bit_flip(k);
  }
  throw std::invalid_argument("make_channel: unknown channel kind");
}

PauliTransfer BlochTransfer1Q::as_pauli_transfer() const {
  PauliTransfer out;
  out.m[0][0] = 1.0;
  for (std::size_t i = 0; i < 3; ++i) {
    out.m[i + 1][0] = shift[i];
    out.m[i + 1][i + 1] = scale[i];
  }
  return out;
}

BlochTransfer1Q bloch_transfer(const KrausChannel& ch) {
  require_complete(ch, "bloch_transfer");
  // M[a][b] = Tr(sigma_a Phi(sigma_b)) / 2
  std::array<std::array<double, 4>, 4> m{};
  for (std::size_t b = 0; b < 4; ++b) {
    const ComplexMatrix image = conjugate(ch, sigma(b));
    for (std::size_t a = 0; a < 4; ++a) m[a][b] = 0.5 * hs_inner(sigma(a), image).real();
  }
  BlochTransfer1Q out;
  for (std::size_t i = 1; i < 4; ++i) {
    for (std::size_t j = 1; j < 4; ++j) {
      if (i != j && std::abs(m[i][j]) > kOffDiagonalTol) {
        throw std::invalid_argument("bloch_transfer: channel does not act diagonally on the Bloch vector");
      }
    }
    out.scale[i - 1] = m[i][i];
    out.shift[i - 1] = m[i][0];
  }
  return out;
}

ComplexMatrix apply_kraus(const KrausChannel& ch_a, const KrausChannel& ch_b,
                          const ComplexMatrix& rho) {
  require_complete(ch_a, "apply_kraus");
  require_complete(ch_b, "apply_kraus");
  if (rho.dim() != 4) throw std::invalid_argument("apply_kraus: expected a 4x4 matrix");
  ComplexMatrix out(4);
  for (const auto& e : ch_a.ops)
    for (const auto& f : ch_b.ops) {
      const ComplexMatrix op = kron(e, f);
      out += op * rho * op.adjoint();
    }
  return out;
}

TwoQubitBloch apply_local(const KrausChannel& ch_a, const KrausChannel& ch_b,
                          const TwoQubitBloch& s) {
  return apply_transfers(bloch_transfer(ch_a).as_pauli_transfer(),
                         bloch_transfer(ch_b).as_pauli_transfer(), s);
}

}  // namespace qdisc
