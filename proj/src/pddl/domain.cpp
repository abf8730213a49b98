#include "macopp/pddl/domain.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace macopp::pddl {

std::string AtomTemplate::str() const {
    std::string out = "(" + predicate;
    for (const auto& t : terms) out += " " + t;
    return out + ")";
}

const PredicateDecl* DomainDef::predicate(std::string_view n) const {
    for (const auto& p : predicates)
        if (p.name == n) return &p;
    return nullptr;
}

const TypedName* DomainDef::constant(std::string_view n) const {
    for (const auto& c : constants)
        if (c.name == n) return &c;
    return nullptr;
}

const ActionSchema* DomainDef::action(std::string_view n, bool belief_variant) const {
    for (const auto& a : actions)
        if (a.name == n && a.belief_variant == belief_variant) return &a;
    return nullptr;
}

bool DomainDef::has_type(std::string_view type) const {
    return type == "object" || std::find(types.begin(), types.end(), type) != types.end();
}

std::vector<TypedName> parse_typed_list(const std::vector<SExpr>& items, std::size_t start, bool variables) {
    std::vector<TypedName> out;
    std::size_t pending = 0;  // names waiting for a "- type" suffix
    for (std::size_t i = start; i < items.size(); ++i) {
        const SExpr& item = items[i];
        if (item.is_list) throw ParseError("expected a name, found a list", item.pos);
        if (item.atom == "-") {
            if (i + 1 >= items.size() || items[i + 1].is_list || pending == 0)
                throw ParseError("dangling type marker '-'", item.pos);
            const std::string& type = items[i + 1].atom;
            for (std::size_t k = out.size() - pending; k < out.size(); ++k) out[k].type = type;
            pending = 0;
            ++i;
            continue;
        }
        if (variables != is_variable(item.atom))
            throw ParseError(variables ? "expected a variable, found '" + item.atom + "'"
                                       : "unexpected variable '" + item.atom + "'",
                             item.pos);
        out.push_back({item.atom, "object", item.pos});
        ++pending;
    }
    return out;
}

AtomTemplate parse_atom(const SExpr& expr) {
    if (!expr.is_list || expr.items.empty() || expr.items.front().is_list)
        throw ParseError("expected an atom like (predicate args...), found " + expr.str(), expr.pos);
    AtomTemplate atom{expr.items.front().atom, {}, expr.pos};
    if (atom.predicate == "and" || atom.predicate == "not" || atom.predicate == "when")
        throw ParseError("expected an atom, found '" + atom.predicate + "' expression", expr.pos);
    for (std::size_t i = 1; i < expr.items.size(); ++i) {
        if (expr.items[i].is_list) throw ParseError("nested terms are not supported", expr.items[i].pos);
        atom.terms.push_back(expr.items[i].atom);
    }
    return atom;
}

namespace {

// Flattens `(and a b ...)`, a single atom, or `()` into a list of elements.
std::vector<const SExpr*> conjuncts(const SExpr& expr) {
    std::vector<const SExpr*> out;
    if (expr.is_list && expr.items.empty()) return out;
    if (expr.is_form("and")) {
        for (std::size_t i = 1; i < expr.items.size(); ++i) {
            auto inner = conjuncts(expr.items[i]);
            out.insert(out.end(), inner.begin(), inner.end());
        }
        return out;
    }
    out.push_back(&expr);
    return out;
}

std::vector<AtomTemplate> parse_condition(const SExpr& expr) {
    std::vector<AtomTemplate> out;
    for (const SExpr* c : conjuncts(expr)) {
        if (c->is_form("not")) throw ParseError("negative preconditions are not supported", c->pos);
        out.push_back(parse_atom(*c));
    }
    return out;
}

void parse_literals(const SExpr& expr, std::vector<AtomTemplate>& add, std::vector<AtomTemplate>& del,
                    std::vector<ConditionalTemplate>* when) {
    for (const SExpr* c : conjuncts(expr)) {
        if (c->is_form("not")) {
            if (c->items.size() != 2) throw ParseError("(not ...) takes exactly one atom", c->pos);
            del.push_back(parse_atom(c->items[1]));
        } else if (c->is_form("when")) {
            if (!when) throw ParseError("nested 'when' is not supported", c->pos);
            if (c->items.size() != 3) throw ParseError("(when <condition> <effect>) expected", c->pos);
            ConditionalTemplate cond;
            cond.condition = parse_condition(c->items[1]);
            parse_literals(c->items[2], cond.add, cond.del, nullptr);
            when->push_back(std::move(cond));
        } else {
            add.push_back(parse_atom(*c));
        }
    }
}

class DomainChecker {
public:
    explicit DomainChecker(const DomainDef& d) : d_(d) {}

    void check() {
        for (const auto& p : d_.predicates)
            for (const auto& param : p.params) check_type(param.type, param.pos);
        for (const auto& c : d_.constants) check_type(c.type, c.pos);

        std::set<std::pair<std::string, bool>> seen;
        for (const auto& a : d_.actions) {
            if (!seen.emplace(a.name, a.belief_variant).second)
                throw ParseError("duplicate action schema '" + a.name + "'" +
                                     (a.belief_variant ? " (belief variant)" : ""),
                                 a.pos);
            check_action(a);
        }
        for (const auto& a : d_.actions) {
            if (!a.belief_variant) continue;
            const ActionSchema* base = d_.action(a.name, false);
            if (!base) throw ParseError("belief variant '" + a.name + "' has no base definition", a.pos);
            if (base->params != a.params)
                throw ParseError("belief variant '" + a.name + "' must declare the same parameters as its base",
                                 a.pos);
            if (base->actor != a.actor)
                throw ParseError("belief variant '" + a.name + "' has a different actor than its base", a.pos);
        }
    }

private:
    void check_type(const std::string& type, SourcePos pos) const {
        if (!d_.has_type(type)) throw ParseError("unknown type '" + type + "'", pos);
    }

    void check_atom(const AtomTemplate& atom, const ActionSchema& a) const {
        const PredicateDecl* p = d_.predicate(atom.predicate);
        if (!p) throw ParseError("undeclared predicate '" + atom.predicate + "'", atom.pos);
        if (p->params.size() != atom.terms.size())
            throw ParseError("arity mismatch for '" + atom.predicate + "': expected " +
                                 std::to_string(p->params.size()) + " argument(s), got " +
                                 std::to_string(atom.terms.size()),
                             atom.pos);
        for (std::size_t i = 0; i < atom.terms.size(); ++i) {
            const std::string& term = atom.terms[i];
            std::string type;
            if (is_variable(term)) {
                auto it = std::find_if(a.params.begin(), a.params.end(),
                                       [&](const TypedName& t) { return t.name == term; });
                if (it == a.params.end())
                    throw ParseError("unbound variable '" + term + "' in action '" + a.name + "'", atom.pos);
                type = it->type;
            } else {
                const TypedName* c = d_.constant(term);
                if (!c) throw ParseError("unknown constant '" + term + "' in action '" + a.name + "'", atom.pos);
                type = c->type;
            }
            const std::string& expected = p->params[i].type;
            if (expected != "object" && expected != type)
                throw ParseError("type mismatch for argument " + std::to_string(i + 1) + " of '" +
                                     atom.predicate + "': expected " + expected + ", got " + type,
                                 atom.pos);
        }
    }

    void check_action(const ActionSchema& a) const {
        std::set<std::string> names;
        for (const auto& p : a.params) {
            check_type(p.type, p.pos);
            if (!names.insert(p.name).second) throw ParseError("duplicate parameter '" + p.name + "'", p.pos);
        }
        if (a.cost < Rational(0)) throw ParseError("negative cost on action '" + a.name + "'", a.pos);
        for (const auto* list : {&a.pre, &a.add, &a.del})
            for (const auto& atom : *list) check_atom(atom, a);
        for (const auto& w : a.when)
            for (const auto* list : {&w.condition, &w.add, &w.del})
                for (const auto& atom : *list) check_atom(atom, a);
        for (const auto& atom : a.add) {
            if (std::find(a.del.begin(), a.del.end(), atom) != a.del.end())
                throw ParseError("'" + atom.str() + "' is both added and deleted by '" + a.name + "'", atom.pos);
        }
    }

    const DomainDef& d_;
};

Actor parse_actor(const SExpr& value) {
    if (value.is_atom("robot")) return Actor::Robot;
    if (value.is_atom("human")) return Actor::Human;
    throw ParseError("actor must be 'robot' or 'human', found " + value.str(), value.pos);
}

ActionSchema parse_action(const SExpr& form, Actor default_actor) {
    if (form.items.size() < 2 || form.items[1].is_list) throw ParseError("action requires a name", form.pos);
    ActionSchema a;
    a.name = form.items[1].atom;
    a.actor = default_actor;
    a.pos = form.pos;
    const auto& items = form.items;
    for (std::size_t i = 2; i < items.size(); ++i) {
        const SExpr& key = items[i];
        if (key.is_list || key.atom.empty() || key.atom.front() != ':')
            throw ParseError("expected an action keyword, found " + key.str(), key.pos);
        if (key.atom == ":belief") {
            a.belief_variant = true;
            continue;
        }
        if (i + 1 >= items.size()) throw ParseError("missing value for " + key.atom, key.pos);
        const SExpr& value = items[++i];
        if (key.atom == ":parameters") {
            if (!value.is_list) throw ParseError(":parameters expects a list", value.pos);
            a.params = parse_typed_list(value.items, 0, true);
        } else if (key.atom == ":precondition") {
            a.pre = parse_condition(value);
        } else if (key.atom == ":effect") {
            parse_literals(value, a.add, a.del, &a.when);
        } else if (key.atom == ":cost") {
            if (value.is_list) throw ParseError(":cost expects a number", value.pos);
            try {
                a.cost = Rational::parse(value.atom);
            } catch (const std::exception&) {
                throw ParseError("invalid cost '" + value.atom + "'", value.pos);
            }
        } else if (key.atom == ":actor") {
            a.actor = parse_actor(value);
        } else {
            throw ParseError("unknown action keyword " + key.atom, key.pos);
        }
    }
    return a;
}

}  // namespace

DomainDef parse_domain(std::string_view text, Actor default_actor) {
    auto top = read_sexprs(text);
    if (top.size() != 1 || !top[0].is_form("define"))
        throw ParseError("expected a single (define (domain ...) ...) form", top.empty() ? SourcePos{} : top[0].pos);
    const SExpr& def = top[0];
    if (def.items.size() < 2 || !def.items[1].is_form("domain") || def.items[1].items.size() != 2)
        throw ParseError("expected (domain <name>)", def.pos);

    DomainDef d;
    d.name = def.items[1].items[1].atom;
    for (std::size_t i = 2; i < def.items.size(); ++i) {
        const SExpr& section = def.items[i];
        if (!section.is_list || section.items.empty() || section.items[0].is_list)
            throw ParseError("expected a domain section", section.pos);
        const std::string& head = section.items[0].atom;
        if (head == ":requirements") {
            continue;
        } else if (head == ":types") {
            for (const auto& t : parse_typed_list(section.items, 1, false)) {
                if (t.type != "object")
                    throw ParseError("type hierarchies are not supported ('" + t.name + "')", t.pos);
                if (!d.has_type(t.name)) d.types.push_back(t.name);
            }
        } else if (head == ":constants") {
            for (auto& c : parse_typed_list(section.items, 1, false)) {
                if (d.constant(c.name)) throw ParseError("duplicate constant '" + c.name + "'", c.pos);
                d.constants.push_back(std::move(c));
            }
        } else if (head == ":predicates") {
            for (std::size_t k = 1; k < section.items.size(); ++k) {
                const SExpr& p = section.items[k];
                if (!p.is_list || p.items.empty() || p.items[0].is_list)
                    throw ParseError("expected a predicate declaration", p.pos);
                PredicateDecl decl{p.items[0].atom, parse_typed_list(p.items, 1, true)};
                if (d.predicate(decl.name)) throw ParseError("duplicate predicate '" + decl.name + "'", p.pos);
                d.predicates.push_back(std::move(decl));
            }
        } else if (head == ":action") {
            d.actions.push_back(parse_action(section, default_actor));
        } else {
            throw ParseError("unknown domain section " + head, section.pos);
        }
    }
    DomainChecker(d).check();
    return d;
}

namespace {

void print_typed(std::ostream& os, const std::vector<TypedName>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) os << ' ';
        os << names[i].name << " - " << names[i].type;
    }
}

void print_atoms(std::ostream& os, const std::vector<AtomTemplate>& atoms) {
    os << "(and";
    for (const auto& a : atoms) os << ' ' << a.str();
    os << ')';
}

void print_effect(std::ostream& os, const std::vector<AtomTemplate>& add, const std::vector<AtomTemplate>& del) {
    for (const auto& a : add) os << ' ' << a.str();
    for (const auto& a : del) os << " (not " << a.str() << ')';
}

}  // namespace

std::string print_domain(const DomainDef& d) {
    std::ostringstream os;
    os << "(define (domain " << d.name << ")\n";
    if (!d.types.empty()) {
        os << "  (:types";
        for (const auto& t : d.types) os << ' ' << t;
        os << ")\n";
    }
    if (!d.constants.empty()) {
        os << "  (:constants ";
        print_typed(os, d.constants);
        os << ")\n";
    }
    os << "  (:predicates";
    for (const auto& p : d.predicates) {
        os << " (" << p.name;
        if (!p.params.empty()) os << ' ';
        print_typed(os, p.params);
        os << ')';
    }
    os << ")\n";
    for (const auto& a : d.actions) {
        os << "  (:action " << a.name << "\n    :actor " << to_string(a.actor) << '\n';
        if (a.belief_variant) os << "    :belief\n";
        os << "    :parameters (";
        print_typed(os, a.params);
        os << ")\n    :precondition ";
        print_atoms(os, a.pre);
        os << "\n    :effect (and";
        print_effect(os, a.add, a.del);
        for (const auto& w : a.when) {
            os << " (when ";
            print_atoms(os, w.condition);
            os << " (and";
            print_effect(os, w.add, w.del);
            os << "))";
        }
        os << ")\n    :cost " << a.cost.str() << ")\n";
    }
    os << ")\n";
    return os.str();
}

DomainDef merge_domains(const DomainDef& robot, const DomainDef& human) {
    DomainDef out = robot;
    out.name = robot.name + "+" + human.name;
    for (const auto& t : human.types)
        if (!out.has_type(t)) out.types.push_back(t);
    for (const auto& c : human.constants) {
        if (const TypedName* existing = out.constant(c.name)) {
            if (existing->type != c.type)
                throw ParseError("constant '" + c.name + "' declared with conflicting types", c.pos);
        } else {
            out.constants.push_back(c);
        }
    }
    for (const auto& p : human.predicates) {
        if (const PredicateDecl* existing = out.predicate(p.name)) {
            if (existing->params.size() != p.params.size())
                throw ParseError("arity mismatch: predicate '" + p.name + "' declared with different arities", {});
            for (std::size_t i = 0; i < p.params.size(); ++i)
                if (existing->params[i].type != p.params[i].type)
                    throw ParseError("predicate '" + p.name + "' declared with conflicting argument types", {});
        } else {
            out.predicates.push_back(p);
        }
    }
    for (const auto& a : human.actions) {
        if (out.action(a.name, a.belief_variant))
            throw ParseError("duplicate action schema '" + a.name + "' across domain files", a.pos);
        out.actions.push_back(a);
    }
    return out;
}

}  // namespace macopp::pddl
