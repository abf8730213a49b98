#include "macopp/pddl/problem.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace macopp::pddl {

std::size_t InitSpec::expansion_count() const {
    constexpr std::size_t max = std::numeric_limits<std::size_t>::max();
    std::size_t count = 1;
    auto mul = [&](std::size_t f) {
        if (f != 0 && count > max / f) count = max;
        else count *= f;
    };
    for (std::size_t i = 0; i < unknown.size(); ++i) mul(2);
    for (const auto& g : oneof_groups) mul(g.size());
    return count;
}

namespace {

class ProblemReader {
public:
    ProblemReader(const DomainDef& domain, ProblemDef& out) : domain_(domain), out_(out) {}

    const std::string* type_of(const std::string& object) const {
        for (const auto& o : out_.objects)
            if (o.name == object) return &o.type;
        if (const TypedName* c = domain_.constant(object)) return &c->type;
        return nullptr;
    }

    Fluent fluent(const SExpr& expr) const {
        AtomTemplate atom = parse_atom(expr);
        const PredicateDecl* p = domain_.predicate(atom.predicate);
        if (!p) throw ParseError("undeclared predicate '" + atom.predicate + "'", expr.pos);
        if (p->params.size() != atom.terms.size())
            throw ParseError("arity mismatch for '" + atom.predicate + "'", expr.pos);
        for (std::size_t i = 0; i < atom.terms.size(); ++i) {
            const std::string& term = atom.terms[i];
            if (is_variable(term)) throw ParseError("variables are not allowed in problem files", expr.pos);
            const std::string* type = type_of(term);
            if (!type) throw ParseError("unknown object '" + term + "'", expr.pos);
            const std::string& expected = p->params[i].type;
            if (expected != "object" && expected != *type)
                throw ParseError("type mismatch for '" + term + "' in " + expr.str() + ": expected " + expected,
                                 expr.pos);
        }
        return Fluent{atom.predicate, atom.terms};
    }

    std::vector<Fluent> fluent_list(const SExpr& expr) const {
        std::vector<Fluent> out;
        if (expr.is_list && expr.items.empty()) return out;
        if (expr.is_form("and")) {
            for (std::size_t i = 1; i < expr.items.size(); ++i) out.push_back(fluent(expr.items[i]));
            return out;
        }
        out.push_back(fluent(expr));
        return out;
    }

    void read_init(const SExpr& section) {
        for (std::size_t i = 1; i < section.items.size(); ++i) {
            const SExpr& item = section.items[i];
            if (item.is_form("known")) {
                for (std::size_t k = 1; k < item.items.size(); ++k) out_.init.known.push_back(fluent(item.items[k]));
            } else if (item.is_form("unknown")) {
                for (std::size_t k = 1; k < item.items.size(); ++k)
                    out_.init.unknown.push_back(fluent(item.items[k]));
            } else if (item.is_form("oneof")) {
                std::vector<Fluent> group;
                for (std::size_t k = 1; k < item.items.size(); ++k) group.push_back(fluent(item.items[k]));
                std::sort(group.begin(), group.end());
                if (std::adjacent_find(group.begin(), group.end()) != group.end())
                    throw ParseError("oneof group repeats a fluent", item.pos);
                if (group.size() < 2) throw ParseError("oneof group needs at least two members", item.pos);
                out_.init.oneof_groups.push_back(std::move(group));
            } else {
                out_.init.known.push_back(fluent(item));
            }
        }
    }

    void check_init(SourcePos pos) const {
        std::set<Fluent> known(out_.init.known.begin(), out_.init.known.end());
        std::set<Fluent> uncertain;
        auto claim = [&](const Fluent& f) {
            if (known.count(f)) throw ParseError("fluent " + f.str() + " is both known and uncertain", pos);
            if (!uncertain.insert(f).second)
                throw ParseError("fluent " + f.str() + " appears in more than one uncertainty clause", pos);
        };
        for (const auto& f : out_.init.unknown) claim(f);
        for (const auto& g : out_.init.oneof_groups)
            for (const auto& f : g) claim(f);

        bool uncertain_init = !uncertain.empty();
        if (uncertain_init && !has_true_init_)
            throw ParseError("initial state has uncertainty; :true-init must designate the actual initial state", pos);
        for (const auto& f : out_.true_init) {
            if (!uncertain.count(f))
                throw ParseError(":true-init fluent " + f.str() + " is not declared unknown or oneof", pos);
        }
        for (const auto& g : out_.init.oneof_groups) {
            auto n = std::count_if(g.begin(), g.end(), [&](const Fluent& f) {
                return std::find(out_.true_init.begin(), out_.true_init.end(), f) != out_.true_init.end();
            });
            if (n != 1)
                throw ParseError(":true-init must select exactly one member of oneof group starting " + g.front().str(),
                                 pos);
        }
    }

    void read(const SExpr& def) {
        if (def.items.size() < 2 || !def.items[1].is_form("problem") || def.items[1].items.size() != 2)
            throw ParseError("expected (problem <name>)", def.pos);
        out_.name = def.items[1].items[1].atom;
        for (std::size_t i = 2; i < def.items.size(); ++i) {
            const SExpr& section = def.items[i];
            if (!section.is_list || section.items.empty() || section.items[0].is_list)
                throw ParseError("expected a problem section", section.pos);
            const std::string& head = section.items[0].atom;
            if (head == ":domain") {
                if (section.items.size() != 2) throw ParseError("(:domain <name>) expected", section.pos);
                out_.domain = section.items[1].atom;
            } else if (head == ":objects") {
                for (auto& o : parse_typed_list(section.items, 1, false)) {
                    if (!domain_.has_type(o.type)) throw ParseError("unknown object type '" + o.type + "'", o.pos);
                    if (type_of(o.name)) throw ParseError("duplicate object '" + o.name + "'", o.pos);
                    out_.objects.push_back(std::move(o));
                }
            } else if (head == ":init") {
                read_init(section);
                init_pos_ = section.pos;
            } else if (head == ":true-init") {
                has_true_init_ = true;
                for (std::size_t k = 1; k < section.items.size(); ++k)
                    for (auto& f : fluent_list(section.items[k])) out_.true_init.push_back(std::move(f));
            } else if (head == ":goal") {
                if (section.items.size() != 2) throw ParseError("(:goal <condition>) expected", section.pos);
                out_.goal = fluent_list(section.items[1]);
            } else {
                throw ParseError("unknown problem section " + head, section.pos);
            }
        }
        check_init(init_pos_);
    }

private:
    const DomainDef& domain_;
    ProblemDef& out_;
    bool has_true_init_ = false;
    SourcePos init_pos_;
};

}  // namespace

ProblemDef parse_problem(std::string_view text, const DomainDef& domain) {
    auto top = read_sexprs(text);
    if (top.size() != 1 || !top[0].is_form("define"))
        throw ParseError("expected a single (define (problem ...) ...) form", top.empty() ? SourcePos{} : top[0].pos);
    ProblemDef out;
    ProblemReader(domain, out).read(top[0]);
    return out;
}

std::vector<WorldState> enumerate_initial_states(const InitSpec& init, FluentTable& table, std::size_t cap) {
    std::size_t count = init.expansion_count();
    if (count > cap)
        throw ResourceLimit("initial belief would contain " + std::to_string(count) + " states (cap " +
                            std::to_string(cap) + ")");
    std::vector<FluentId> base;
    for (const auto& f : init.known) base.push_back(table.intern(f));
    std::vector<FluentId> unknown;
    for (const auto& f : init.unknown) unknown.push_back(table.intern(f));
    std::vector<std::vector<FluentId>> groups;
    for (const auto& g : init.oneof_groups) {
        groups.emplace_back();
        for (const auto& f : g) groups.back().push_back(table.intern(f));
    }

    std::vector<WorldState> states;
    states.reserve(count);
    std::vector<FluentId> current = base;
    // Depth-first over choice points: unknowns first, then oneof groups.
    auto recurse = [&](auto&& self, std::size_t point) -> void {
        if (point == unknown.size() + groups.size()) {
            states.emplace_back(current);
            return;
        }
        if (point < unknown.size()) {
            self(self, point + 1);
            current.push_back(unknown[point]);
            self(self, point + 1);
            current.pop_back();
            return;
        }
        for (FluentId f : groups[point - unknown.size()]) {
            current.push_back(f);
            self(self, point + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return states;
}

Belief expand_initial_belief(const InitSpec& init, FluentTable& table, std::size_t cap) {
    return Belief(enumerate_initial_states(init, table, cap));
}

WorldState designated_initial_state(const ProblemDef& problem, FluentTable& table) {
    std::vector<FluentId> fluents;
    for (const auto& f : problem.init.known) fluents.push_back(table.intern(f));
    for (const auto& f : problem.true_init) fluents.push_back(table.intern(f));
    return WorldState(std::move(fluents));
}

}  // namespace macopp::pddl
