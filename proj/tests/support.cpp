#include "support.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace support {

std::filesystem::path data_dir() { return MACOPP_DATA_DIR; }

pddl::ProblemPaths bundled(const std::string& name, const std::string& sensors) {
    std::filesystem::path dir = data_dir() / name;
    return {dir / "domain-r.pddl", dir / "domain-h.pddl", dir / "problem.pddl", dir / sensors};
}

MaCoppProblem load_bundled(const std::string& name, const std::string& sensors) {
    return pddl::load_problem(bundled(name, sensors));
}

Fluent fluent(const std::string& text) {
    std::string t = text;
    std::replace(t.begin(), t.end(), '(', ' ');
    std::replace(t.begin(), t.end(), ')', ' ');
    std::istringstream is(t);
    Fluent f;
    is >> f.name;
    for (std::string a; is >> a;) f.args.push_back(a);
    return f;
}

std::vector<FluentId> Toy::ids(std::initializer_list<const char*> texts) {
    std::vector<FluentId> out;
    for (const char* t : texts) out.push_back(id(t));
    return out;
}

WorldState Toy::state(std::initializer_list<const char*> texts) {
    std::vector<FluentId> v = ids(texts);
    std::sort(v.begin(), v.end());
    return WorldState(v);
}

StateSet to_set(const WorldState& s) { return StateSet(s.fluents().begin(), s.fluents().end()); }

WorldState to_state(const StateSet& s) { return WorldState(std::vector<FluentId>(s.begin(), s.end())); }

std::optional<StateSet> ref_apply(const StateSet& s, const ActionBody& body) {
    for (FluentId f : body.pre)
        if (!s.count(f)) return std::nullopt;
    StateSet out = s;
    for (FluentId f : body.add) out.insert(f);
    for (FluentId f : body.del) out.erase(f);
    for (const auto& w : body.when) {
        bool fires = std::all_of(w.condition.begin(), w.condition.end(), [&](FluentId f) { return s.count(f) > 0; });
        if (!fires) continue;
        for (FluentId f : w.add) out.insert(f);
        for (FluentId f : w.del) out.erase(f);
    }
    return out;
}

std::set<WorldState> ref_belief_update(const Belief& belief, std::span<const GroundAction> acting, ObservationId obs,
                                       const SensorModel& sensor) {
    std::set<WorldState> out;
    if (sensor.is_null(obs)) {
        out.insert(belief.states().begin(), belief.states().end());
        return out;
    }
    for (const auto& s : belief.states()) {
        for (const auto& a : acting) {
            auto next = ref_apply(to_set(s), a.belief_body());
            if (!next) continue;
            WorldState ns = to_state(*next);
            if (sensor.observe(a, ns) == obs) out.insert(ns);
        }
    }
    return out;
}

namespace {

using RefBelief = std::set<StateSet>;

bool ref_entails(const RefBelief& b, std::span<const FluentId> goal) {
    for (const auto& s : b)
        for (FluentId g : goal)
            if (!s.count(g)) return false;
    return true;
}

std::optional<RefBelief> ref_progress(const RefBelief& b, const GroundAction& a) {
    RefBelief out;
    for (const auto& s : b) {
        auto next = ref_apply(s, a.belief_body());
        if (!next) return std::nullopt;
        out.insert(*next);
    }
    return out;
}

RefBelief to_ref(const Belief& b) {
    RefBelief out;
    for (const auto& s : b.states()) out.insert(to_set(s));
    return out;
}

}  // namespace

std::optional<Rational> ref_conformant_cost(const Belief& belief, std::span<const FluentId> goal,
                                            std::span<const GroundAction> actions, std::size_t max_beliefs) {
    // Enumerate the reachable belief graph, then relax edge costs to a fixpoint.
    std::map<RefBelief, std::size_t> index;
    std::vector<RefBelief> beliefs;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> edges;
    auto intern = [&](const RefBelief& b) {
        auto [it, inserted] = index.emplace(b, beliefs.size());
        if (inserted) {
            if (beliefs.size() >= max_beliefs) throw std::runtime_error("reference planner: too many beliefs");
            beliefs.push_back(b);
            edges.emplace_back();
        }
        return it->second;
    };
    intern(to_ref(belief));
    for (std::size_t i = 0; i < beliefs.size(); ++i) {
        for (const auto& a : actions) {
            auto next = ref_progress(beliefs[i], a);
            if (!next) continue;
            std::size_t j = intern(*next);
            edges[i].emplace_back(j, a.cost);
        }
    }
    std::vector<std::optional<Rational>> dist(beliefs.size());
    for (std::size_t i = 0; i < beliefs.size(); ++i)
        if (ref_entails(beliefs[i], goal)) dist[i] = Rational(0);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < beliefs.size(); ++i) {
            for (const auto& [j, c] : edges[i]) {
                if (!dist[j]) continue;
                Rational via = c + *dist[j];
                if (!dist[i] || via < *dist[i]) {
                    dist[i] = via;
                    changed = true;
                }
            }
        }
    }
    return dist[0];
}

std::optional<Rational> enumerate_sequences(const Belief& belief, std::span<const FluentId> goal,
                                            std::span<const GroundAction> actions, int max_len) {
    std::optional<Rational> best;
    std::function<void(const RefBelief&, Rational, int)> dfs = [&](const RefBelief& b, Rational cost, int len) {
        if (ref_entails(b, goal) && (!best || cost < *best)) best = cost;
        if (len == max_len) return;
        for (const auto& a : actions) {
            auto next = ref_progress(b, a);
            if (next) dfs(*next, cost + a.cost, len + 1);
        }
    };
    dfs(to_ref(belief), Rational(0), 0);
    return best;
}

std::size_t robot_branching(const MaCoppProblem& problem, int depth) {
    std::set<StateSet> frontier{to_set(problem.initial_state)};
    std::set<StateSet> seen = frontier;
    std::size_t most = 0;
    for (int d = 0; d <= depth; ++d) {
        std::set<StateSet> next;
        for (const auto& s : frontier) {
            std::size_t n = 0;
            for (const auto& a : problem.robot_actions) {
                auto t = ref_apply(s, a.body);
                if (!t) continue;
                ++n;
                if (seen.insert(*t).second) next.insert(*t);
            }
            most = std::max(most, n);
        }
        frontier = std::move(next);
    }
    return most;
}

std::size_t reachable_states(const MaCoppProblem& problem, std::size_t cap) {
    std::set<StateSet> seen;
    std::deque<StateSet> queue;
    for (const auto& s : problem.initial_belief.states())
        if (seen.insert(to_set(s)).second) queue.push_back(to_set(s));
    while (!queue.empty()) {
        StateSet s = queue.front();
        queue.pop_front();
        for (const auto* set : {&problem.robot_actions, &problem.human_actions}) {
            for (const auto& a : *set) {
                for (const ActionBody* body : {&a.body, &a.belief_body()}) {
                    auto t = ref_apply(s, *body);
                    if (t && seen.insert(*t).second) {
                        if (seen.size() > cap) return seen.size();
                        queue.push_back(*t);
                    }
                }
            }
        }
    }
    return seen.size();
}

}  // namespace support
