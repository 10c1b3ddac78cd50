#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "realmpc/common.hpp"
#include "realmpc/shares.hpp"
#include "realmpc/transcript.hpp"

namespace realmpc {

// Dependency-driven synchronous network simulator.
//
// A Plan is a DAG of steps over value handles. Local steps run party-by-party
// and cost nothing. Communication steps (open, reveal, sign exchange,
// broadcast) are buffered and delivered at round boundaries; every
// communication whose inputs are already available joins the current round, so
// independent protocol instances share rounds without any extra wiring.

struct SharedH {
  int id = -1;
};
struct PublicH {
  int id = -1;
};
struct PrivH {
  int id = -1;
};
struct PubVecH {
  int id = -1;
};

struct Handle {
  enum class Kind { Shared, Public, Priv, PubVec } kind;
  int id;
};
inline Handle dep(SharedH h) { return {Handle::Kind::Shared, h.id}; }
inline Handle dep(PublicH h) { return {Handle::Kind::Public, h.id}; }
inline Handle dep(PrivH h) { return {Handle::Kind::Priv, h.id}; }
inline Handle dep(PubVecH h) { return {Handle::Kind::PubVec, h.id}; }

class Plan;

// A party's view while evaluating a local step: its own lane of shared slots,
// public values, and private values it owns. Nothing else is reachable, so
// protocol code cannot accidentally read another party's state.
class LocalView {
 public:
  LocalView(Plan& plan, Party party, int lane) : plan_(plan), party_(party), lane_(lane) {}

  Party party() const { return party_; }
  int lane() const { return lane_; }  // index within the step's group

  double get(SharedH h) const;
  double pub(PublicH h) const;
  const std::vector<double>& pubvec(PubVecH h) const;
  double priv(PrivH h) const;

  void set(SharedH h, double v);
  void set_priv(PrivH h, double v);

 private:
  Plan& plan_;
  Party party_;
  int lane_;
};

class Plan {
 public:
  explicit Plan(int n) : n_(n) {
    group_ids_[full_group(n)] = 0;
    groups_.push_back(full_group(n));
  }

  int n() const { return n_; }

  int group_id(const std::vector<Party>& parties) {
    auto it = group_ids_.find(parties);
    if (it != group_ids_.end()) return it->second;
    int id = static_cast<int>(groups_.size());
    groups_.push_back(parties);
    group_ids_[parties] = id;
    return id;
  }
  const std::vector<Party>& group(int gid) const { return groups_[gid]; }

  // --- handle allocation -------------------------------------------------

  SharedH alloc_shared(int gid) {
    shared_.push_back({gid, std::vector<double>(groups_[gid].size(), 0.0), false});
    return {static_cast<int>(shared_.size()) - 1};
  }

  // Shares provided from outside the plan (inputs, dealer material).
  SharedH input_shared(int gid, const std::vector<double>& values) {
    if (values.size() != groups_[gid].size()) throw PlanError("input share arity mismatch");
    shared_.push_back({gid, values, true});
    return {static_cast<int>(shared_.size()) - 1};
  }

  PublicH input_public(double v) {
    publics_.push_back({v, true});
    return {static_cast<int>(publics_.size()) - 1};
  }

  PublicH alloc_public() {
    publics_.push_back({0.0, false});
    return {static_cast<int>(publics_.size()) - 1};
  }

  PrivH alloc_priv(Party owner) {
    privs_.push_back({owner, 0.0, false});
    return {static_cast<int>(privs_.size()) - 1};
  }

  PubVecH alloc_pubvec() {
    pubvecs_.push_back({{}, false});
    return {static_cast<int>(pubvecs_.size()) - 1};
  }

  // --- steps ---------------------------------------------------------------

  using LocalFn = std::function<void(LocalView&)>;

  // Runs once per party of the group; must set every handle in `outs` that it
  // is responsible for. Outputs may be Shared or Priv handles.
  void local(int gid, std::vector<Handle> deps, std::vector<Handle> outs, LocalFn fn) {
    Step s;
    s.kind = Step::Kind::Local;
    s.gid = gid;
    s.deps = std::move(deps);
    s.outs = std::move(outs);
    s.fn = std::move(fn);
    steps_.push_back(std::move(s));
  }

  PublicH open_sum(SharedH src) { return add_open(src, Step::Kind::OpenSum); }
  PublicH open_prod(SharedH src) { return add_open(src, Step::Kind::OpenProd); }

  // All-to-all exchange of the sign of each party's lane; result is the
  // product of signs. Metered in raw bits.
  PublicH open_sign(SharedH src) { return add_open(src, Step::Kind::SignOpen); }

  PrivH reveal_sum(SharedH src, Party target) {
    Step s;
    s.kind = Step::Kind::Reveal;
    s.gid = shared_[src.id].gid;
    s.deps = {dep(src)};
    PrivH out = alloc_priv(target);
    s.outs = {dep(out)};
    s.src = src;
    s.target = target;
    steps_.push_back(std::move(s));
    return out;
  }

  // One party sends `count` values to everyone in the group; fn runs at the
  // source when its deps are ready.
  PubVecH broadcast(int gid, Party source, size_t count, std::vector<Handle> deps,
                    std::function<std::vector<double>(LocalView&)> fn) {
    Step s;
    s.kind = Step::Kind::Broadcast;
    s.gid = gid;
    s.deps = std::move(deps);
    PubVecH out = alloc_pubvec();
    s.outs = {dep(out)};
    s.target = source;
    s.count = count;
    s.vec_fn = std::move(fn);
    steps_.push_back(std::move(s));
    return out;
  }

  // --- execution -------------------------------------------------------

  // Runs the plan to completion, accumulating rounds and traffic into `cost`.
  void execute(CostTally& cost) {
    std::vector<bool> done(steps_.size(), false);
    size_t remaining = steps_.size();
    while (remaining > 0) {
      // Local steps are free and run as soon as their inputs exist.
      bool progress = true;
      while (progress) {
        progress = false;
        for (size_t i = 0; i < steps_.size(); ++i) {
          if (done[i] || steps_[i].kind != Step::Kind::Local) continue;
          if (!ready(steps_[i])) continue;
          run_local(steps_[i]);
          done[i] = true;
          --remaining;
          progress = true;
        }
      }
      // Everything communicable right now shares one round.
      std::vector<size_t> batch;
      for (size_t i = 0; i < steps_.size(); ++i) {
        if (done[i] || steps_[i].kind == Step::Kind::Local) continue;
        if (ready(steps_[i])) batch.push_back(i);
      }
      if (batch.empty()) {
        if (remaining > 0) throw PlanError("plan stuck: unsatisfiable step dependencies");
        break;
      }
      for (size_t i : batch) {
        run_comm(steps_[i], cost);
        done[i] = true;
        --remaining;
      }
      cost.rounds += 1;
    }
  }

  // --- extraction ------------------------------------------------------

  std::vector<double> shared_values(SharedH h) const {
    if (!shared_[h.id].ready) throw PlanError("shared handle never produced");
    return shared_[h.id].values;
  }
  int shared_group(SharedH h) const { return shared_[h.id].gid; }
  double public_value(PublicH h) const {
    if (!publics_[h.id].ready) throw PlanError("public handle never produced");
    return publics_[h.id].val;
  }
  double priv_value(PrivH h) const {
    if (!privs_[h.id].ready) throw PlanError("private handle never produced");
    return privs_[h.id].val;
  }
  const std::vector<double>& pubvec_value(PubVecH h) const {
    if (!pubvecs_[h.id].ready) throw PlanError("vector handle never produced");
    return pubvecs_[h.id].vals;
  }

 private:
  friend class LocalView;

  struct SharedSlot {
    int gid;
    std::vector<double> values;
    bool ready;
  };
  struct PublicSlot {
    double val;
    bool ready;
  };
  struct PrivSlot {
    Party owner;
    double val;
    bool ready;
  };
  struct PubVecSlot {
    std::vector<double> vals;
    bool ready;
  };

  struct Step {
    enum class Kind { Local, OpenSum, OpenProd, SignOpen, Reveal, Broadcast } kind;
    int gid = 0;
    std::vector<Handle> deps;
    std::vector<Handle> outs;
    LocalFn fn;
    std::function<std::vector<double>(LocalView&)> vec_fn;
    SharedH src;
    Party target = 0;
    size_t count = 0;
  };

  PublicH add_open(SharedH src, Step::Kind kind) {
    Step s;
    s.kind = kind;
    s.gid = shared_[src.id].gid;
    s.deps = {dep(src)};
    PublicH out = alloc_public();
    s.outs = {dep(out)};
    s.src = src;
    steps_.push_back(std::move(s));
    return out;
  }

  bool handle_ready(const Handle& h) const {
    switch (h.kind) {
      case Handle::Kind::Shared: return shared_[h.id].ready;
      case Handle::Kind::Public: return publics_[h.id].ready;
      case Handle::Kind::Priv: return privs_[h.id].ready;
      case Handle::Kind::PubVec: return pubvecs_[h.id].ready;
    }
    return false;
  }

  bool ready(const Step& s) const {
    for (const auto& d : s.deps)
      if (!handle_ready(d)) return false;
    return true;
  }

  void mark_outs(const Step& s) {
    for (const auto& o : s.outs) {
      switch (o.kind) {
        case Handle::Kind::Shared: shared_[o.id].ready = true; break;
        case Handle::Kind::Public: publics_[o.id].ready = true; break;
        case Handle::Kind::Priv: privs_[o.id].ready = true; break;
        case Handle::Kind::PubVec: pubvecs_[o.id].ready = true; break;
      }
    }
  }

  void run_local(Step& s) {
    const auto& g = groups_[s.gid];
    for (size_t lane = 0; lane < g.size(); ++lane) {
      LocalView view(*this, g[lane], static_cast<int>(lane));
      s.fn(view);
    }
    mark_outs(s);
  }

  void run_comm(Step& s, CostTally& cost) {
    const auto& g = groups_[s.gid];
    const long long k = static_cast<long long>(g.size());
    switch (s.kind) {
      case Step::Kind::OpenSum:
      case Step::Kind::OpenProd: {
        const auto& vals = shared_[s.src.id].values;
        double acc = (s.kind == Step::Kind::OpenSum) ? 0.0 : 1.0;
        for (double v : vals) acc = (s.kind == Step::Kind::OpenSum) ? acc + v : acc * v;
        publics_[s.outs[0].id].val = acc;
        cost.scalars += k * (k - 1);
        break;
      }
      case Step::Kind::SignOpen: {
        const auto& vals = shared_[s.src.id].values;
        int acc = 1;
        for (double v : vals) acc *= sign_of(v);
        publics_[s.outs[0].id].val = acc;
        cost.bits += k * (k - 1);
        break;
      }
      case Step::Kind::Reveal: {
        const auto& vals = shared_[s.src.id].values;
        double acc = 0.0;
        for (double v : vals) acc += v;
        privs_[s.outs[0].id].val = acc;
        cost.scalars += k - 1;
        break;
      }
      case Step::Kind::Broadcast: {
        int lane = -1;
        for (size_t i = 0; i < g.size(); ++i)
          if (g[i] == s.target) lane = static_cast<int>(i);
        if (lane < 0) throw PlanError("broadcast source not in group");
        LocalView view(*this, s.target, lane);
        auto vals = s.vec_fn(view);
        if (vals.size() != s.count) throw PlanError("broadcast count mismatch");
        pubvecs_[s.outs[0].id].vals = std::move(vals);
        cost.scalars += static_cast<long long>(s.count) * (k - 1);
        break;
      }
      case Step::Kind::Local: break;
    }
    mark_outs(s);
  }

  int n_;
  std::vector<std::vector<Party>> groups_;
  std::map<std::vector<Party>, int> group_ids_;
  std::vector<SharedSlot> shared_;
  std::vector<PublicSlot> publics_;
  std::vector<PrivSlot> privs_;
  std::vector<PubVecSlot> pubvecs_;
  std::vector<Step> steps_;
};

inline double LocalView::get(SharedH h) const {
  const auto& slot = plan_.shared_[h.id];
  const auto& g = plan_.groups_[slot.gid];
  for (size_t i = 0; i < g.size(); ++i)
    if (g[i] == party_) return slot.values[i];
  throw PlanError("party reads a share it does not hold");
}

inline double LocalView::pub(PublicH h) const { return plan_.publics_[h.id].val; }

inline const std::vector<double>& LocalView::pubvec(PubVecH h) const {
  return plan_.pubvecs_[h.id].vals;
}

inline double LocalView::priv(PrivH h) const {
  const auto& slot = plan_.privs_[h.id];
  if (slot.owner != party_) throw PlanError("party reads a private value it does not own");
  return slot.val;
}

inline void LocalView::set(SharedH h, double v) {
  auto& slot = plan_.shared_[h.id];
  const auto& g = plan_.groups_[slot.gid];
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i] == party_) {
      slot.values[i] = v;
      return;
    }
  }
  throw PlanError("party writes a share it does not hold");
}

inline void LocalView::set_priv(PrivH h, double v) {
  auto& slot = plan_.privs_[h.id];
  if (slot.owner != party_) throw PlanError("party writes a private value it does not own");
  slot.val = v;
}

}  // namespace realmpc
