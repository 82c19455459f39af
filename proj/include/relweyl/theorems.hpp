#pragma once

#include <cstdint>
#include <memory>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "relweyl/characters.hpp"
#include "relweyl/coinvariants.hpp"
#include "relweyl/root_system.hpp"
#include "relweyl/weyl_group.hpp"

namespace relweyl {

// One verified claim over one scope. A failing report always carries at least
// one witness; `data` holds structured byproducts (orders, kernels, values)
// and is deterministic across runs. `ms` is the only nondeterministic field.
struct VerificationReport {
  std::string claim_id;
  std::string type;
  std::vector<int> J;  // 0-based internally; serialized 1-based
  bool pass = false;
  std::string detail;
  std::vector<std::string> witnesses;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  double ms = 0.0;
};

// Per-type caches shared by the checks so each group, character table and
// lattice is built once per suite run. Not copyable; parabolic data lives in
// a node-based map so references stay valid as more subsets are requested.
class TypeContext {
 public:
  TypeContext(const std::string& type_name, const Int& max_order);

  const std::string& type_name() const { return name_; }
  int rank() const { return rs_->rank(); }
  const RootSystem& rs() const { return *rs_; }
  const WeylGroup& weyl() const { return *W_; }
  const MolienEngine& molien() const { return *eng_; }
  const CoinvariantModule& coinvariants();  // built on first use

  struct ParabolicData {
    ParabolicSubgroup subgroup;
    RelativeWeylGroup rwg;
    EpsilonCharacter eps;
    GradedCharacter chars;
  };
  const ParabolicData& parabolic(const std::vector<int>& J);
  // Explicit Schubert-side lattice; intended for small ranks, where the
  // integer element action is cheap.
  const InvariantLattice& lattice(const std::vector<int>& J);

 private:
  std::string name_;
  std::unique_ptr<RootSystem> rs_;
  std::unique_ptr<WeylGroup> W_;
  std::unique_ptr<MolienEngine> eng_;
  std::unique_ptr<CoinvariantModule> cm_;
  std::map<std::vector<int>, ParabolicData> parabolics_;
  std::map<std::vector<int>, InvariantLattice> lattices_;
};

// trace_{2N-2i}(w) = trace_{2i}(w^{-1}) eps_U(w) for every w in W(L) and
// every 0 <= i <= N: the graded-character form of the duality twist
// H^{2N-2i}(G/P) ~ H^{2i}(G/P)* (x) H^{2N}(G/P).
VerificationReport check_duality_twist(TypeContext& ctx, const std::vector<int>& J);

// The same identity read as rho_U = phi_U . Lambda_U on graded characters:
// the compactly supported model (degrees reversed, dual traces) matches the
// ordinary model precomposed with Lambda_U(w) = eps_U(w) w. At rank <= 3 the
// characters are cross-checked against the explicit integer lattice action.
VerificationReport check_main_theorem_cohomology(TypeContext& ctx, const std::vector<int>& J);

// p = 0: kernel of the char-0 representation via class traces (a finite-order
// element with trace = dimension in every degree is the identity).
// p prime: kernel of the explicit mod-p matrix action. Pass requires a
// trivial kernel when p does not divide |W|; when p divides |W| the kernel is
// reported informationally. Throws NotPrime for composite p > 0.
VerificationReport check_faithfulness(TypeContext& ctx, const std::vector<int>& J, std::int64_t p);

// J = {}: eps_U equals the sign character (-1)^length on all of W.
VerificationReport check_sign_specialization(TypeContext& ctx);

// N_W(W_L) = W_L x| W(L), plus the codim-1 classification of W(L) on V^{W_L}.
VerificationReport check_semidirect(TypeContext& ctx, const std::vector<int>& J);

// Graded dimensions of the W_L-invariants equal the coefficients of
// W(t)/W_L(t), by three routes: the exact series division, the identity
// column of the character table, and a matrix-kernel computation (exact
// integer lattice at rank <= 3, mod-p rank confirmation above).
VerificationReport check_invariant_dims(TypeContext& ctx, const std::vector<int>& J);

// del_i del_i = 0 and independence of del_w from the chosen reduced word, on
// the full monomial basis up to a spanning degree. Rank <= 3 only.
VerificationReport check_braid_relations(TypeContext& ctx);

// End-to-end reproduction of the G = SL_4, L = S(GL_2 x GL_2) example:
// W_L = <s1, s3>, W(L) = {e, s2 s1 s3 s2} of order 2, length 4 in W but
// length 1 in W(L), so the naive parity (-1)^4 = +1 disagrees with the sign
// a length-1 generator would get. Dims (1,1,2,1,1) and eps_U are recomputed
// and cross-checked against the top-degree lattice action.
VerificationReport check_sl4_example(TypeContext& ctx);
VerificationReport check_sl4_example();

inline const std::vector<std::string>& default_type_grid() {
  static const std::vector<std::string> g = {"A1", "A2", "A3", "A4", "B2", "B3",
                                             "B4", "C3", "C4", "D4", "F4", "G2"};
  return g;
}

struct SuiteConfig {
  std::vector<std::string> types = default_type_grid();
  // One explicit list of 0-based subsets, or nullopt for every subset of the
  // simple roots of each type.
  std::optional<std::vector<std::vector<int>>> subsets;
  std::vector<std::int64_t> primes = {2, 3, 5, 7};
  std::vector<std::string> claims;  // empty = all claims
  Int max_order = Int(kDefaultMaxOrder);
  unsigned threads = 0;  // 0 = one worker per type, 1 = sequential
};

// Runs every selected check over the grid. Deterministic report order
// (types in config order, subsets by size then lex, fixed claim order);
// per-check exceptions become failed reports, the sweep never aborts.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

bool all_pass(const std::vector<VerificationReport>& reports);

nlohmann::ordered_json report_to_json(const VerificationReport& r, bool include_timings = true);
std::string reports_to_jsonl(const std::vector<VerificationReport>& reports,
                             bool include_timings = true);
std::string reports_to_tsv(const std::vector<VerificationReport>& reports);
std::string reports_to_pretty(const std::vector<VerificationReport>& reports);

}  // namespace relweyl
