#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"

#include "specgraph/quotient.hpp"
#include "specgraph/spec_graph.hpp"

namespace specgraph {

/// Everything computed once per module: lattice, spectra and AG(M).
struct ModuleData {
  std::shared_ptr<const Spectrum> spectrum;
  SpecGraph ag;
  GraphReport ag_report;

  const Spectrum& spec() const { return *spectrum; }
  const SubmoduleLattice& lattice() const { return spectrum->lattice(); }
  const FinModule& module() const { return spectrum->module(); }
};

inline std::shared_ptr<const ModuleData> make_module_data(const FinModule& m,
                                                          std::size_t bound = default_max_order()) {
  auto lat = std::make_shared<const SubmoduleLattice>(m, bound);
  auto data = std::make_shared<ModuleData>();
  data->spectrum = std::make_shared<const Spectrum>(std::move(lat));
  data->ag = build_annihilating(data->spectrum);
  data->ag_report = analyze(data->ag);
  return data;
}

/// Write-once map from (ring modulus, invariant factors) to ModuleData.
/// Safe to share between threads; a racing duplicate computation is
/// discarded in favour of the first inserted value.
class ModuleCache {
 public:
  explicit ModuleCache(std::size_t bound = default_max_order()) : bound_(bound) {}

  std::shared_ptr<const ModuleData> get(const FinModule& m) {
    Key key{m.ring().modulus(), std::vector<u64>(m.invariant_factors().begin(), m.invariant_factors().end())};
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    auto data = make_module_data(m, bound_);
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(std::move(key), std::move(data)).first->second;
  }

  std::size_t bound() const { return bound_; }

 private:
  using Key = std::pair<u64, std::vector<u64>>;
  std::size_t bound_;
  std::mutex mu_;
  std::map<Key, std::shared_ptr<const ModuleData>> map_;
};

/// Submodule reference used in witnesses: lattice index plus generators.
inline nlohmann::json submodule_ref(const SubmoduleLattice& lat, std::size_t i) {
  return {{"index", i}, {"generators", generators_string(lat.module(), lat[i])}};
}

/// One (M, T) verification instance, or (M) alone for module-level claims.
/// Derived artifacts are computed on first use. Not thread-safe: each worker
/// owns its instances; only the ModuleCache is shared.
class Instance {
 public:
  Instance(std::shared_ptr<const ModuleData> data, std::optional<Bitset> t, ModuleCache& cache)
      : data_(std::move(data)), t_(std::move(t)), cache_(&cache) {
    if (t_ && t_->size() != data_->spec().max_spec().size())
      throw InvalidArgument("subset does not match Max(M)");
  }

  const ModuleData& data() const { return *data_; }
  const Spectrum& spec() const { return data_->spec(); }
  const SubmoduleLattice& lattice() const { return data_->lattice(); }
  const FinModule& module() const { return data_->module(); }
  ModuleCache& cache() const { return *cache_; }

  bool has_subset() const { return t_.has_value(); }
  const Bitset& subset() const {
    if (!t_) throw InvalidArgument("instance has no subset T");
    return *t_;
  }
  /// Lattice indices of the members of T.
  std::vector<std::size_t> subset_members() const {
    std::vector<std::size_t> out;
    subset().for_each([&](std::size_t q) { out.push_back(spec().max_spec()[q]); });
    return out;
  }

  /// {"ring": N, "factors": [...], "T": [lattice indices] or null}.
  nlohmann::json key() const {
    nlohmann::json k{{"ring", module().ring().modulus()},
                     {"factors", std::vector<u64>(module().invariant_factors().begin(),
                                                  module().invariant_factors().end())}};
    k["T"] = t_ ? nlohmann::json(subset_members()) : nlohmann::json(nullptr);
    return k;
  }

  const SpecGraph& g() {
    if (!g_) g_ = build_zariski_max(data_->spectrum, subset());
    return *g_;
  }
  const GraphReport& g_report() {
    if (!g_report_) g_report_ = analyze(g());
    return *g_report_;
  }
  /// G with partners restricted to non-zero submodules.
  const SpecGraph& g_nonzero() {
    if (!g_nonzero_) g_nonzero_ = build_zariski_max(data_->spectrum, subset(), PartnerRule::nonzero_proper);
    return *g_nonzero_;
  }
  const SpecGraph& gd() {
    if (!gd_) gd_ = build_zariski_max_disjoint(data_->spectrum, subset());
    return *gd_;
  }
  const GraphReport& gd_report() {
    if (!gd_report_) gd_report_ = analyze(gd());
    return *gd_report_;
  }

  /// Lattice index of ℑ(T).
  std::size_t im() {
    if (!im_) im_ = spec().im_of(subset());
    return *im_;
  }

  const Quotient& quotient() {
    if (!quotient_) quotient_.emplace(module(), lattice()[im()]);
    return *quotient_;
  }
  /// ModuleData of M/ℑ(T).
  const ModuleData& bar() {
    if (!bar_) {
      bar_ = cache_->get(quotient().module());
      const auto& qlat = bar_->lattice();
      lift_.resize(qlat.size());
      for (std::size_t j = 0; j < qlat.size(); ++j) lift_[j] = lattice().index_of(quotient().preimage(qlat[j]));
    }
    return *bar_;
  }
  /// Index in M of the preimage of submodule j of M/ℑ(T).
  std::size_t lift(std::size_t j) {
    bar();
    return lift_[j];
  }
  /// Index in M/ℑ(T) of L/ℑ(T), or nullopt when L does not contain ℑ(T).
  std::optional<std::size_t> drop(std::size_t l) {
    if (!lattice()[l].contains(lattice()[im()])) return std::nullopt;
    return bar().lattice().index_of(quotient().image(lattice()[l]));
  }
  /// Whether M/ℑ(T) is itself a vertex of AG(M/ℑ(T)).
  bool bar_is_ag_vertex() {
    const ModuleData& b = bar();
    return b.ag.has_vertex(b.lattice().top_index());
  }

  const std::vector<std::size_t>& semi_maximal() {
    if (!semi_) semi_ = spec().semi_maximal_submodules();
    return *semi_;
  }

 private:
  std::shared_ptr<const ModuleData> data_;
  std::optional<Bitset> t_;
  ModuleCache* cache_;

  std::optional<SpecGraph> g_, g_nonzero_, gd_;
  std::optional<GraphReport> g_report_, gd_report_;
  std::optional<std::size_t> im_;
  std::optional<Quotient> quotient_;
  std::shared_ptr<const ModuleData> bar_;
  std::vector<std::size_t> lift_;
  std::optional<std::vector<std::size_t>> semi_;
};

}  // namespace specgraph
