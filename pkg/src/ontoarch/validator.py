"""Conformance checks over a resolved suite.

Enforces the architecture guidelines (G1/G2), the placement rules (R1-R3),
the three axioms (A1-A3) over ground worlds, relationship domain/range and
cardinality conformance, and the property schema. All checks are pure
functions returning violations; nothing here raises on bad suites.

`oracle_check_axioms` evaluates the axioms by brute-force enumeration of all
quantifier instantiations and exists solely as an independent test oracle
for the edge-wise `check_axioms`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from . import metamodel
from .metamodel import BUILTIN_MODULE, RootKind
from .model import (
    Fact,
    Level,
    OntologyModule,
    RelationDecl,
    ResolvedSuite,
    World,
    merged_view,
)
from .reporting import Diagnostic, default_anchor
from .source import SourceSpan


class RuleId(Enum):
    G1 = "G1"
    G2 = "G2"
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    A1 = "A1"
    A2 = "A2"
    A3 = "A3"
    REL_CONFORMANCE = "RelConformance"
    PROP_CONFORMANCE = "PropConformance"
    CARDINALITY = "Cardinality"


_CODE_RULES: dict[str, RuleId] = {
    "E201": RuleId.G2,
    "E202": RuleId.R2,
    "E203": RuleId.G2,
    "E211": RuleId.R1,
    "E212": RuleId.R1,
    "E213": RuleId.R1,
    "E221": RuleId.R2,
    "E231": RuleId.REL_CONFORMANCE,
    "E232": RuleId.REL_CONFORMANCE,
    "E233": RuleId.REL_CONFORMANCE,
    "E234": RuleId.REL_CONFORMANCE,
    "E301": RuleId.R3,
    "E302": RuleId.R3,
    "E311": RuleId.A1,
    "E312": RuleId.A2,
    "E313": RuleId.A3,
    "W201": RuleId.PROP_CONFORMANCE,
    "W202": RuleId.PROP_CONFORMANCE,
    "W203": RuleId.PROP_CONFORMANCE,
    "W301": RuleId.CARDINALITY,
}


@dataclass(frozen=True)
class Violation:
    """One falsified rule with a witness sufficient to re-derive it by hand."""

    rule: RuleId
    code: str
    message: str
    span: SourceSpan
    witness: str = ""
    anchor: str = ""

    def sort_key(self) -> tuple:
        return (self.span.file, self.span.start_line, self.span.start_col, self.code, self.message)

    def to_diagnostic(self) -> Diagnostic:
        return Diagnostic(
            code=self.code,
            message=self.message,
            span=self.span,
            rule=self.rule.value,
            anchor=self.anchor,
            witness=self.witness or None,
        )


def _violation(code: str, message: str, span: SourceSpan, witness: str = "", anchor: str | None = None) -> Violation:
    return Violation(
        rule=_CODE_RULES[code],
        code=code,
        message=message,
        span=span,
        witness=witness,
        anchor=anchor if anchor is not None else default_anchor(code),
    )


# ---------------------------------------------------------------------------
# Architecture (Guidelines #1 and #2).
# ---------------------------------------------------------------------------

def check_architecture(suite: ResolvedSuite) -> list[Violation]:
    """The built-in ThingFO is the one permitted FO ontology: user modules at
    FO are errors, as are imports that cross levels."""
    out: list[Violation] = []
    for m in suite.modules.values():
        if m.level is Level.FO:
            out.append(
                _violation(
                    "E201",
                    f"module {m.name} declares itself at the foundational level; "
                    f"only the built-in {BUILTIN_MODULE} ontology may live there",
                    m.span,
                    witness=f"ontology {m.name} at FO",
                )
            )
        for imp in m.imports:
            if m.level is Level.FO:
                out.append(
                    _violation(
                        "E203",
                        f"foundational-level module {m.name} may not import anything",
                        imp.span,
                        witness=f"{m.name} imports {imp.name}",
                    )
                )
            elif suite.level_of(imp.name) is not m.level:
                out.append(
                    _violation(
                        "E202",
                        f"import crosses levels: {m.name} ({m.level.name}) imports "
                        f"{imp.name} ({suite.level_of(imp.name).name})",
                        imp.span,
                        witness=f"{m.name} imports {imp.name}",
                    )
                )
    return out


# ---------------------------------------------------------------------------
# Kind chains (shared by Rule #1, Rule #2 and relationship conformance).
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainStatus:
    outcome: str  # "foundational" | "escape" | "dead_end" | "cycle" | "downward"
    key: str | None = None
    detail: str = ""


def same_level_components(suite: ResolvedSuite) -> dict[str, frozenset[str]]:
    """Import-connected components of same-level modules (undirected)."""
    by_level: dict[Level, list[str]] = {}
    for name, m in suite.modules.items():
        by_level.setdefault(m.level, []).append(name)
    component_of: dict[str, frozenset[str]] = {}
    for level in sorted(by_level, key=lambda l: l.rank):
        names = sorted(by_level[level])
        neighbors: dict[str, set[str]] = {n: set() for n in names}
        for n in names:
            for imp in suite.modules[n].imports:
                if imp.name in neighbors:
                    neighbors[n].add(imp.name)
                    neighbors[imp.name].add(n)
        seen: set[str] = set()
        for n in names:
            if n in seen:
                continue
            group: set[str] = set()
            queue = [n]
            while queue:
                cur = queue.pop()
                if cur in group:
                    continue
                group.add(cur)
                queue.extend(sorted(neighbors[cur] - group))
            seen.update(group)
            frozen = frozenset(group)
            for member in group:
                component_of[member] = frozen
    return component_of


def chain_status(
    suite: ResolvedSuite,
    module_name: str,
    rel: RelationDecl,
    components: dict[str, frozenset[str]] | None,
) -> ChainStatus:
    """Follow a relation's `kind` links until a foundational relationship.

    Hops to a higher level or within the same module are always followed.
    Lateral hops (same level, other module) escape when `components` is None
    (Rule #1 leaves them to Rule #2) and otherwise must stay inside the
    hop source's import-connected component. Hops toward a more concrete
    level never terminate.
    """
    visited: list[str] = []
    cur_mod, cur_rel = module_name, rel
    while True:
        here = f"{cur_mod}.{cur_rel.name}"
        if here in visited:
            cycle = " -> ".join(visited[visited.index(here):] + [here])
            return ChainStatus("cycle", detail=f"kind chain cycles: {cycle}")
        visited.append(here)
        target_mod, target_name = suite.kind_target(cur_rel.kind_ref, cur_mod)
        if target_mod == BUILTIN_MODULE:
            return ChainStatus("foundational", key=target_name)
        cur_level = suite.level_of(cur_mod)
        target_level = suite.level_of(target_mod)
        if target_level.rank > cur_level.rank:
            return ChainStatus(
                "downward",
                detail=f"kind of {here} points to the more concrete level "
                f"{target_level.name} ({target_mod}.{target_name})",
            )
        if target_level.rank == cur_level.rank and target_mod != cur_mod:
            if components is None:
                return ChainStatus("escape", detail=f"kind of {here} crosses into {target_mod}")
            if target_mod not in components.get(cur_mod, frozenset({cur_mod})):
                return ChainStatus(
                    "dead_end",
                    detail=f"kind of {here} leaves the import-connected component "
                    f"({target_mod} is not related to {cur_mod})",
                )
        next_rel = suite.get_relation(target_mod, target_name)
        assert next_rel is not None  # guaranteed by resolution
        cur_mod, cur_rel = target_mod, next_rel


# ---------------------------------------------------------------------------
# Rule #1: correspondence with the immediately higher level.
# ---------------------------------------------------------------------------

def _module_rule1(suite: ResolvedSuite, module: OntologyModule) -> list[Violation]:
    out: list[Violation] = []
    for t in module.terms:
        if t.enriches is None:
            out.append(
                _violation(
                    "E213",
                    f"term {module.name}.{t.name} has no enrichment target",
                    t.span,
                    witness=f"term {t.name}",
                )
            )
            continue
        target_mod, target_name = suite.term_target(t.enriches, module.name)
        target_level = suite.level_of(target_mod)
        if not target_level.is_exactly_above(module.level):
            out.append(
                _violation(
                    "E211",
                    f"term {module.name}.{t.name} ({module.level.name}) enriches "
                    f"{target_mod}.{target_name} ({target_level.name}), which is not "
                    f"the immediately higher level",
                    t.span,
                    witness=f"{module.level.name} -> {target_level.name}",
                )
            )
    for r in module.relations:
        status = chain_status(suite, module.name, r, None)
        if status.outcome in ("cycle", "downward"):
            out.append(
                _violation(
                    "E212",
                    f"relation {module.name}.{r.name} never reaches a foundational "
                    f"relationship: {status.detail}",
                    r.span,
                    witness=status.detail,
                )
            )
    return out


def check_rule1(suite: ResolvedSuite) -> list[Violation]:
    out: list[Violation] = []
    for module in suite.modules.values():
        out.extend(_module_rule1(suite, module))
    return out


# ---------------------------------------------------------------------------
# Rule #2: joint definitions of import-related same-level modules.
# ---------------------------------------------------------------------------

def check_rule2(suite: ResolvedSuite) -> list[Violation]:
    """Re-runs Rule #1 over each import-connected component's merged view.

    Violations already visible module-locally keep their Rule #1 codes;
    failures that only the merged view exposes (lateral kind chains that
    cycle, dead-end, or leave the component) are tagged E221."""
    components = same_level_components(suite)
    out: list[Violation] = []
    done: set[frozenset[str]] = set()
    for name in suite.modules:
        component = components[name]
        if component in done:
            continue
        done.add(component)
        members = sorted(component)
        view = merged_view([suite.modules[m] for m in members])
        for member in members:
            module = suite.modules[member]
            out.extend(_module_rule1(suite, module))
            for r in module.relations:
                local = chain_status(suite, member, r, None)
                if local.outcome != "escape":
                    continue
                joint = chain_status(suite, member, r, components)
                if joint.outcome in ("cycle", "downward", "dead_end"):
                    out.append(
                        _violation(
                            "E221",
                            f"joint definition of {{{', '.join(view.members)}}} leaves "
                            f"relation {member}.{r.name} without a foundational kind: "
                            f"{joint.detail}",
                            r.span,
                            witness=f"component: {', '.join(view.members)}; {joint.detail}",
                        )
                    )
    return out


# ---------------------------------------------------------------------------
# Rule #3: the instance level holds only individuals of particular Things.
# ---------------------------------------------------------------------------

def _classify_individual(
    suite: ResolvedSuite, name: str, type_mod: str, type_name: str, span: SourceSpan, where: str
) -> Violation | None:
    anchor = suite.try_enrichment_root(type_mod, type_name)
    if anchor is None:
        return None  # broken enrichment chain, already flagged as E213
    root = metamodel.root_kind(anchor)
    if root is RootKind.THING_CATEGORY:
        return _violation(
            "E301",
            f"{where} {name} instantiates {type_mod}.{type_name}, whose enrichment "
            f"root is Thing Category; categories do not result in instances",
            span,
            witness=f"{name} : {type_mod}.{type_name} (root ThingCategory)",
        )
    if root in (RootKind.PROPERTY, RootKind.POWER):
        return _violation(
            "E302",
            f"{where} {name} instantiates {type_mod}.{type_name}, whose enrichment "
            f"root is {root.value}; properties and powers exist only as parts of "
            f"things inside worlds",
            span,
            witness=f"{name} : {type_mod}.{type_name} (root {root.value})",
        )
    return None  # Thing and Assertion roots result in instances


def check_rule3(suite: ResolvedSuite) -> list[Violation]:
    out: list[Violation] = []
    for f in suite.instance_files:
        for ind in f.individuals:
            type_mod, type_name = suite.term_target(ind.type_ref, f.of_module)
            v = _classify_individual(suite, ind.name, type_mod, type_name, ind.span, "individual")
            if v:
                out.append(v)
        for w in f.worlds:
            for thing in w.things:
                if thing.instance_of is None:
                    continue
                type_mod, type_name = suite.term_target(thing.instance_of, f.of_module)
                v = _classify_individual(suite, thing.name, type_mod, type_name, thing.span, "thing")
                if v:
                    out.append(v)
    return out


# ---------------------------------------------------------------------------
# Axioms A1-A3 over ground worlds.
# ---------------------------------------------------------------------------

def _axiom_violation(code: str, fact: Fact) -> Violation:
    left, right = fact.left, fact.right
    if code == "E311":
        message = (
            f"property {left} enables power {right}, but they belong to different "
            f"things ({left.primary} vs {right.primary})"
        )
        witness = f"enables({left}, {right}); owner({left})={left.primary}, owner({right})={right.primary}"
    elif code == "E312":
        message = (
            f"power {left} acts upon property {right}, but they belong to different "
            f"things ({left.primary} vs {right.primary})"
        )
        witness = f"actsUpon({left}, {right}); owner({left})={left.primary}, owner({right})={right.primary}"
    else:  # E313
        message = f"power {left} interacts with its own thing {right.primary}"
        witness = f"interacts({left}, {right}); owner({left})={left.primary}"
    return _violation(code, message, fact.span, witness=witness)


def check_axioms(world: World) -> list[Violation]:
    """Edge-wise axiom evaluation.

    Ownership is functional and syntactically evident (parts are referenced
    as `thing.part`), so A1/A2 reduce to owner equality on each edge and A3
    to owner inequality against the interaction target."""
    out: list[Violation] = []
    for fact in world.facts:
        if fact.predicate == "enables" and fact.left.primary != fact.right.primary:
            out.append(_axiom_violation("E311", fact))
        elif fact.predicate == "actsUpon" and fact.left.primary != fact.right.primary:
            out.append(_axiom_violation("E312", fact))
        elif fact.predicate == "interacts" and fact.left.primary == fact.right.primary:
            out.append(_axiom_violation("E313", fact))
    return out


def oracle_check_axioms(world: World) -> list[Violation]:
    """Brute-force axiom evaluation by enumerating every quantifier
    instantiation (thing x property x power) with partOf as ownership.

    Semantically equal violation set to `check_axioms`; kept deliberately
    naive as the independent oracle."""
    things = [t.name for t in world.things]
    props = [(t.name, p.name) for t in world.things for p in t.properties]
    pows = [(t.name, p.name) for t in world.things for p in t.powers]

    def ref_is(ref, owner: str, part: str) -> bool:
        return ref.primary == owner and ref.part == part

    out: list[Violation] = []
    # A1: Thing(t) & Property(prop) & partOf(prop,t) & Power(pow) & enables(prop,pow) -> partOf(pow,t)
    for t in things:
        for p_owner, p_name in props:
            if p_owner != t:  # partOf(prop, t)
                continue
            for w_owner, w_name in pows:
                for fact in world.facts_of("enables"):
                    if ref_is(fact.left, p_owner, p_name) and ref_is(fact.right, w_owner, w_name):
                        if w_owner != t:  # consequent partOf(pow, t) falsified
                            out.append(_axiom_violation("E311", fact))
    # A2: Thing(t) & Power(pow) & partOf(pow,t) & Property(prop) & actsUpon(pow,prop) -> partOf(prop,t)
    for t in things:
        for w_owner, w_name in pows:
            if w_owner != t:
                continue
            for p_owner, p_name in props:
                for fact in world.facts_of("actsUpon"):
                    if ref_is(fact.left, w_owner, w_name) and ref_is(fact.right, p_owner, p_name):
                        if p_owner != t:
                            out.append(_axiom_violation("E312", fact))
    # A3: Thing(t) & Power(pow) & partOf(pow,t) -> not interactsWithOther(pow, t)
    for t in things:
        for w_owner, w_name in pows:
            if w_owner != t:
                continue
            for fact in world.facts_of("interacts"):
                if ref_is(fact.left, w_owner, w_name) and fact.right.part is None and fact.right.primary == t:
                    out.append(_axiom_violation("E313", fact))
    return out


# ---------------------------------------------------------------------------
# Relationship conformance and cardinality.
# ---------------------------------------------------------------------------

def _anchor_matches(suite: ResolvedSuite, term: tuple[str, str], required: str) -> bool:
    anchor = suite.try_enrichment_root(*term)
    if anchor is None:
        return True  # unjudgeable without an enrichment chain; E213 owns it
    if metamodel.is_descendant(anchor, required):
        return True
    # Scope facets stand in for the two scope subtypes: an assertion-rooted
    # term with scope particulars/universals satisfies the matching subtype.
    if required in ("AssertionOnParticulars", "AssertionOnUniversals"):
        if metamodel.root_kind(anchor) is RootKind.ASSERTION:
            decl = suite.get_term(*term)
            if decl is not None and decl.scope is not None:
                wanted = "particulars" if required == "AssertionOnParticulars" else "universals"
                return decl.scope == wanted
    return False


def check_relationship_conformance(suite: ResolvedSuite) -> list[Violation]:
    components = same_level_components(suite)
    out: list[Violation] = []
    for module_name, r in suite.all_relations():
        status = chain_status(suite, module_name, r, components)
        if status.outcome != "foundational":
            continue  # chain failures belong to Rule #1 / Rule #2
        variants = metamodel.relationship_variants(status.key or "")
        from_term = suite.term_target(r.from_ref, module_name)
        to_term = suite.term_target(r.to_ref, module_name)
        if suite.try_enrichment_root(*from_term) is None or suite.try_enrichment_root(*to_term) is None:
            continue  # endpoint chain broken, already flagged as E213
        ok = any(
            _anchor_matches(suite, from_term, v.domain) and _anchor_matches(suite, to_term, v.range)
            for v in variants
        )
        if not ok:
            expected = " or ".join(f"{v.domain} -> {v.range}" for v in variants)
            definition = "; ".join(dict.fromkeys(v.definition for v in variants))
            out.append(
                _violation(
                    "E231",
                    f"relation {module_name}.{r.name} has kind {variants[0].display!r} "
                    f"but connects {suite.enrichment_root(*from_term)}-rooted to "
                    f"{suite.enrichment_root(*to_term)}-rooted terms (expected {expected})",
                    r.span,
                    witness=f"from root {suite.enrichment_root(*from_term)}, "
                    f"to root {suite.enrichment_root(*to_term)}",
                    anchor=definition,
                )
            )
    for f, w in suite.all_worlds():
        for fact in w.facts_of("belongsTo"):
            mod, name = suite.world_term_target(fact.right, f.of_module)
            anchor = suite.try_enrichment_root(mod, name)
            if anchor is not None and metamodel.root_kind(anchor) is not RootKind.THING_CATEGORY:
                out.append(
                    _violation(
                        "E232",
                        f"belongsTo target {mod}.{name} is rooted at "
                        f"{metamodel.root_kind(anchor).value}, not Thing Category",
                        fact.span,
                        witness=f"belongsTo({fact.left}, {fact.right})",
                    )
                )
        for fact in w.facts_of("defines"):
            mod, name = suite.world_term_target(fact.right, f.of_module)
            anchor = suite.try_enrichment_root(mod, name)
            if anchor is not None and metamodel.root_kind(anchor) is not RootKind.ASSERTION:
                out.append(
                    _violation(
                        "E233",
                        f"defines target {mod}.{name} is rooted at "
                        f"{metamodel.root_kind(anchor).value}, not Assertion",
                        fact.span,
                        witness=f"defines({fact.left}, {fact.right})",
                    )
                )
        for fact in w.facts_of("relatesWith"):
            if fact.left.primary == fact.right.primary:
                out.append(
                    _violation(
                        "E234",
                        f"thing {fact.left.primary} relates with itself in world {w.name}",
                        fact.span,
                        witness=f"relatesWith({fact.left}, {fact.right})",
                    )
                )
        out.extend(_check_acts_upon_cardinality(w))
    return out


def _check_acts_upon_cardinality(world: World) -> list[Violation]:
    # Only enforced in worlds that describe acting at all: ground worlds may
    # legitimately be partial descriptions, hence a warning, not an error.
    spec = metamodel.relationship_variants("actsUpon")[0]
    if not spec.multiplicity or spec.multiplicity[0] < 1:
        return []
    acts = world.facts_of("actsUpon")
    if not acts:
        return []
    covered = {(fact.left.primary, fact.left.part) for fact in acts}
    out: list[Violation] = []
    for thing in world.things:
        for power in thing.powers:
            if (thing.name, power.name) not in covered:
                out.append(
                    _violation(
                        "W301",
                        f"power {thing.name}.{power.name} acts upon no property in "
                        f"world {world.name}, which declares actsUpon facts",
                        power.span,
                        witness=f"power {thing.name}.{power.name}; 0 actsUpon edges",
                    )
                )
    return out


# ---------------------------------------------------------------------------
# Property schema conformance.
# ---------------------------------------------------------------------------

def check_property_conformance(suite: ResolvedSuite) -> list[Violation]:
    out: list[Violation] = []
    for module_name, t in suite.all_terms():
        anchor = suite.try_enrichment_root(module_name, t.name)
        if anchor is None:
            continue  # broken enrichment chain, already flagged as E213
        root = metamodel.root_kind(anchor)
        allowed = metamodel.property_keys_for_root(root)
        for attr in t.attributes:
            if attr.key not in allowed:
                out.append(
                    _violation(
                        "W201",
                        f"attribute {attr.key!r} on term {module_name}.{t.name} is not "
                        f"owned by {root.value}-rooted terms (allowed: {', '.join(allowed)})",
                        attr.span,
                        witness=f"{t.name}.{attr.key}",
                    )
                )
        if root is RootKind.THING and "description" not in {a.key for a in t.attributes}:
            out.append(
                _violation(
                    "W202",
                    f"thing-rooted term {module_name}.{t.name} declares no description",
                    t.span,
                    witness=f"term {t.name}",
                )
            )
        if t.scope is not None and root is not RootKind.ASSERTION:
            out.append(
                _violation(
                    "W203",
                    f"term {module_name}.{t.name} declares scope {t.scope!r} but its "
                    f"enrichment root is {root.value}, not Assertion",
                    t.span,
                    witness=f"term {t.name} scope {t.scope}",
                )
            )
    return out


# ---------------------------------------------------------------------------
# Orchestration.
# ---------------------------------------------------------------------------

def validate_suite(suite: ResolvedSuite) -> list[Violation]:
    """Run every check, deduplicate (Rule #2 re-derives Rule #1 findings on
    merged views), and emit sorted by (file, span, code)."""
    collected: list[Violation] = []
    collected.extend(check_architecture(suite))
    collected.extend(check_rule1(suite))
    collected.extend(check_rule2(suite))
    collected.extend(check_rule3(suite))
    collected.extend(check_relationship_conformance(suite))
    collected.extend(check_property_conformance(suite))
    for _, world in suite.all_worlds():
        collected.extend(check_axioms(world))
    unique: dict[Violation, None] = dict.fromkeys(collected)
    return sorted(unique, key=Violation.sort_key)


def violations_to_diagnostics(violations: Iterable[Violation]) -> list[Diagnostic]:
    return [v.to_diagnostic() for v in violations]
