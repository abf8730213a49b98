#include "macopp/pddl/grounding.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace macopp::pddl {

std::set<std::string> static_predicates(const DomainDef& domain) {
    std::set<std::string> fluent_preds;
    for (const auto& a : domain.actions) {
        for (const auto* list : {&a.add, &a.del})
            for (const auto& atom : *list) fluent_preds.insert(atom.predicate);
        for (const auto& w : a.when)
            for (const auto* list : {&w.add, &w.del})
                for (const auto& atom : *list) fluent_preds.insert(atom.predicate);
    }
    std::set<std::string> out;
    for (const auto& p : domain.predicates)
        if (!fluent_preds.count(p.name)) out.insert(p.name);
    return out;
}

namespace {

struct StaticCheck {
    const AtomTemplate* atom;
    int last_param;  // check once this parameter is bound; -1 for constant-only atoms
};

std::vector<StaticCheck> static_checks(const ActionSchema& schema, const std::set<std::string>& statics) {
    std::vector<StaticCheck> out;
    for (const auto& atom : schema.pre) {
        if (!statics.count(atom.predicate)) continue;
        int last = -1;
        for (const auto& term : atom.terms) {
            if (!is_variable(term)) continue;
            for (std::size_t i = 0; i < schema.params.size(); ++i)
                if (schema.params[i].name == term) last = std::max(last, static_cast<int>(i));
        }
        out.push_back({&atom, last});
    }
    return out;
}

class Grounder {
public:
    Grounder(const DomainDef& domain, const ProblemDef& problem, FluentTable& table)
        : domain_(domain), table_(table), statics_(static_predicates(domain)) {
        for (const auto& c : domain.constants) add_object(c);
        for (const auto& o : problem.objects) add_object(o);
        for (const auto& f : problem.init.known) possible_.insert(f);
        for (const auto& f : problem.init.unknown) possible_.insert(f);
        for (const auto& g : problem.init.oneof_groups) possible_.insert(g.begin(), g.end());
    }

    GroundedActions run() {
        GroundedActions out;
        for (const auto& schema : domain_.actions) {
            if (schema.belief_variant) continue;
            const ActionSchema* belief = domain_.action(schema.name, true);
            std::size_t candidates = 1;
            for (const auto& p : schema.params) candidates *= objects_of(p.type).size();
            out.candidate_count += candidates;

            auto& target = schema.actor == Actor::Robot ? out.robot : out.human;
            Instantiation inst{schema, belief, static_checks(schema, statics_),
                               belief ? static_checks(*belief, statics_) : std::vector<StaticCheck>{},
                               std::vector<std::string>(schema.params.size())};
            bool base_ok = passes(inst.base_checks, -1, inst);
            bool belief_ok = belief && passes(inst.belief_checks, -1, inst);
            if (base_ok || belief_ok) enumerate(inst, 0, base_ok, belief_ok, target);
        }
        return out;
    }

private:
    struct Instantiation {
        const ActionSchema& schema;
        const ActionSchema* belief;
        std::vector<StaticCheck> base_checks;
        std::vector<StaticCheck> belief_checks;
        std::vector<std::string> binding;
    };

    void add_object(const TypedName& o) {
        all_.push_back(o.name);
        by_type_[o.type].push_back(o.name);
    }

    const std::vector<std::string>& objects_of(const std::string& type) const {
        if (type == "object") return all_;
        static const std::vector<std::string> none;
        auto it = by_type_.find(type);
        return it == by_type_.end() ? none : it->second;
    }

    Fluent instantiate(const AtomTemplate& atom, const ActionSchema& schema,
                       const std::vector<std::string>& binding) const {
        Fluent f{atom.predicate, {}};
        for (const auto& term : atom.terms) {
            if (!is_variable(term)) {
                f.args.push_back(term);
                continue;
            }
            for (std::size_t i = 0; i < schema.params.size(); ++i) {
                if (schema.params[i].name == term) {
                    f.args.push_back(binding[i]);
                    break;
                }
            }
        }
        return f;
    }

    // Base and belief schemas share parameter lists, so the base schema resolves both.
    bool passes(const std::vector<StaticCheck>& checks, int param, const Instantiation& inst) const {
        for (const auto& c : checks) {
            if (c.last_param != param) continue;
            if (!possible_.count(instantiate(*c.atom, inst.schema, inst.binding))) return false;
        }
        return true;
    }

    void enumerate(Instantiation& inst, std::size_t index, bool base_alive, bool belief_alive,
                   std::vector<GroundAction>& out) {
        if (index == inst.schema.params.size()) {
            out.push_back(build(inst));
            return;
        }
        for (const auto& obj : objects_of(inst.schema.params[index].type)) {
            inst.binding[index] = obj;
            bool base_ok = base_alive && passes(inst.base_checks, static_cast<int>(index), inst);
            bool belief_ok = belief_alive && passes(inst.belief_checks, static_cast<int>(index), inst);
            if (base_ok || belief_ok) enumerate(inst, index + 1, base_ok, belief_ok, out);
        }
    }

    ActionBody body_of(const ActionSchema& schema, const std::vector<std::string>& binding) {
        ActionBody body;
        auto ids = [&](const std::vector<AtomTemplate>& atoms) {
            std::vector<FluentId> out;
            for (const auto& a : atoms) out.push_back(table_.intern(instantiate(a, schema, binding)));
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        };
        body.pre = ids(schema.pre);
        body.add = ids(schema.add);
        body.del = ids(schema.del);
        for (const auto& w : schema.when) body.when.push_back({ids(w.condition), ids(w.add), ids(w.del)});
        return body;
    }

    GroundAction build(const Instantiation& inst) {
        GroundAction a;
        a.actor = inst.schema.actor;
        a.name = inst.schema.name;
        a.args = inst.binding;
        a.cost = inst.schema.cost;
        a.body = body_of(inst.schema, inst.binding);
        if (inst.belief) a.belief = body_of(*inst.belief, inst.binding);
        return a;
    }

    const DomainDef& domain_;
    FluentTable& table_;
    std::set<std::string> statics_;
    std::set<Fluent> possible_;
    std::vector<std::string> all_;
    std::map<std::string, std::vector<std::string>> by_type_;
};

}  // namespace

GroundedActions ground(const DomainDef& domain, const ProblemDef& problem, FluentTable& table) {
    return Grounder(domain, problem, table).run();
}

}  // namespace macopp::pddl
