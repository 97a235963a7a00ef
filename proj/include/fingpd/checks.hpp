#pragma once

// Law families over a corpus of groupoids, actions and pairs. Morphisms of
// the corpus are not listed by hand: they are the enumerated hom-sets
// between corpus objects over a common base.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fingpd/io.hpp"
#include "fingpd/laws.hpp"

namespace fingpd {

struct Corpus {
  std::vector<std::pair<std::string, GroupoidPtr>>    groupoids;
  std::vector<std::pair<std::string, GroupAction>>    actions;
  std::vector<std::pair<std::string, TransitivePair>> pairs;

  void add(const Instance& x);
};

Corpus fixture_corpus();
// Every *.json file of dir, in file name order.
Corpus load_corpus(const std::string& dir);

// Fault injection: shift entry `index` of the named table by `shift`
// (modulo the table's value range) before the law is probed. Laws that
// do not own a table of that name are unaffected.
struct Corruption {
  std::string   table;
  std::size_t   index = 0;
  std::uint32_t shift = 1;
};

struct CheckOptions {
  std::uint64_t             cap = kDefaultSearchCap;
  std::optional<Corruption> corruption;
};

// Bisection groups, hom-sets and gauge groupoids of a corpus, computed once
// and shared read-only by all laws.
class CorpusContext {
 public:
  struct GroupoidEntry {
    std::string name;
    GroupoidPtr g;
    BisPtr      bis;  // null when enumeration exceeded the cap
  };
  struct ActionEntry {
    std::string    name;
    GroupAction    action;
    ActionGroupoid lt;
  };
  struct PairEntry {
    std::string                          name;
    TransitivePair                       pair;
    std::shared_ptr<const GaugeGroupoid> r;
    BisPtr                               bis_r;
  };

  CorpusContext(const Corpus& corpus, std::uint64_t cap);

  std::uint64_t                     cap() const noexcept { return cap_; }
  const std::vector<GroupoidEntry>& groupoids() const noexcept { return groupoids_; }
  const std::vector<ActionEntry>&   actions() const noexcept { return actions_; }
  const std::vector<PairEntry>&     pairs() const noexcept { return pairs_; }

  // Null when the bases differ or the enumeration exceeded the cap.
  const std::vector<GroupoidMorphism>* homs(std::size_t a, std::size_t b) const;
  const std::vector<SliceMorphism>*    slice_homs(std::size_t a, std::size_t b) const;
  const std::vector<PairMorphism>*     pair_homs(std::size_t a, std::size_t b) const;

  // Locally trivial with every arrow on a bisection.
  bool in_bisbar_domain(std::size_t g) const;

 private:
  std::uint64_t                                                      cap_;
  std::vector<GroupoidEntry>                                         groupoids_;
  std::vector<ActionEntry>                                           actions_;
  std::vector<PairEntry>                                             pairs_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<GroupoidMorphism>> homs_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<SliceMorphism>>    slices_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<PairMorphism>>     pair_homs_;
};

using ContextPtr = std::shared_ptr<const CorpusContext>;

// Family names accepted by laws_for_family.
const std::vector<std::string>& law_families();

// Throws std::invalid_argument for an unknown family.
std::vector<Law> laws_for_family(const std::string& family,
                                 const ContextPtr&  ctx,
                                 const CheckOptions& opts = {});

std::vector<Law> all_laws(const ContextPtr& ctx, const CheckOptions& opts = {});

// E(psi) for psi: G -> G', the unique morphism with counit' . E(psi) =
// psi . counit.
GroupoidMorphism coreflector_on_morphism(const GroupoidMorphism& psi,
                                         const Coreflection&     source,
                                         const Coreflection&     target);

}  // namespace fingpd
