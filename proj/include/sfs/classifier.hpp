#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfs/homology.hpp"
#include "sfs/mubar.hpp"
#include "sfs/partition.hpp"

namespace sfs {

enum class VerdictTag { Embeds, Obstructed, Unknown, BudgetExceeded };
std::string to_string(VerdictTag t);

/// A fact taken from the literature rather than derived here.
struct CitedRule {
  const char* id;
  const char* statement;
  const char* source;
};

const std::vector<CitedRule>& cited_rules();
const CitedRule& cited_rule(const std::string& id);

/// Embedding certificate. Either a sequence of expansions applied to a
/// recognized base followed by genus increases, or (doubled = true) the
/// boundary of a thickened disk space D^2(base fibers).
struct Certificate {
  std::string rule;
  StandardForm base;
  std::vector<std::size_t> expansions;  // fiber index in the current list, 0-based
  long genus_bumps = 0;
  bool doubled = false;
};

/// Names the recognized embedded base ("s3_single", "s3_pair", "cited_example"), if any.
std::optional<std::string> recognized_base(const StandardForm& s);

/// Rebuilds the space described by a certificate.
StandardForm replay(const Certificate& c);
/// replay(c) equals `target` as a space and the base is legitimate for its rule.
bool replay_matches(const Certificate& c, const StandardForm& target);

struct Obstruction {
  std::string name;
  std::string witness;
};

struct TraceEntry {
  std::string test;
  std::string result;  // pass | fail | skip | info | budget_exceeded
  std::string witness;
};

struct ClassifyOptions {
  std::uint64_t node_budget = 20'000'000;
  std::size_t max_k = 14;
};

struct Verdict {
  VerdictTag tag = VerdictTag::Unknown;
  SeifertData input;
  StandardForm standard_form;
  Rational epsilon;
  AbelianGroup h1;
  std::optional<Certificate> certificate;
  std::optional<Obstruction> obstruction;
  std::optional<FamilyMatch> family;
  std::optional<PartitionPair> partitions;
  std::vector<TraceEntry> trace;
};

/// Pairing of an eps = 0 fiber multiset into {r, r'} with r' the complement.
struct EpsZeroPairing {
  bool ok = false;
  std::vector<Rational> representatives;  // one fiber per pair (the disk space)
  std::string witness;                    // imbalance when !ok
};
EpsZeroPairing eps_zero_pairing(const std::vector<Rational>& fibers);

/// Depth-first inverse expansion search down to a recognized base.
struct BaseReduction {
  StandardForm base;
  std::string base_kind;
  std::vector<std::size_t> expansions;  // replay order, from base upwards
};
std::optional<BaseReduction> reduce_to_base(const StandardForm& s);

/// Greedy chain of contractions until none applies.
std::vector<StandardForm> contraction_chain(const StandardForm& s);

Verdict classify(const SeifertData& s, const ClassifyOptions& opts = {});

}  // namespace sfs
