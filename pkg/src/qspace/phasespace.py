"""Position-momentum algebras and the derivative actions they induce.

The extended algebra keeps the coordinate relations, mirrors them onto the
momentum generators, and adds mixed rewrite rules moving a momentum past a
coordinate.  Two differential calculi coexist: the unhatted one rewrites with
the inverse braiding and the metric as inhomogeneous term, the hatted one
with the braiding itself, the inverse calibration constant and the conjugate
metric.  Normal form is coordinate word then momentum word, each internally
ordered; rewriting terminates because the mixed rule strictly reduces the
momentum-before-coordinate inversion count and its constant term drops the
degree by two.

Derivative actions on coefficient functions are obtained by rewriting the
derivative against the element and keeping the part where the derivative was
consumed; terms still carrying a momentum annihilate the vacuum.
"""

from __future__ import annotations

from .scalar import I, ONE, QScalar, divexact
from .spaces import SpaceSpec, Word, momentum_name, space
from .ncalg import NCPoly, TermMap, _add_scaled, normal_word
from .rmatrix import RMatrix, load_rmatrix

UNHATTED = "unhatted"
HATTED = "hatted"
LEFT = "left"
RIGHT = "right"

CALCULI = (UNHATTED, HATTED)
SIDES = (LEFT, RIGHT)


def _mirror_relations(spec: SpaceSpec) -> dict:
    """Coordinate relations transplanted onto the momentum copy."""
    out = {}
    for (a, b), combo in spec.relations.items():
        out[(momentum_name(a), momentum_name(b))] = [
            (tuple(momentum_name(g) for g in w), c) for w, c in combo
        ]
    return out


def _conjugate_metric(spec: SpaceSpec) -> dict:
    # the quantum plane is the one space whose conjugate metric flips sign
    if spec.name == "quantum_plane" or spec.name.startswith("quantum_plane"):
        return {k: -v for k, v in spec.metric.items()}
    return dict(spec.metric)


class PhaseAlgebra:
    """Rewrite systems for one space with both calculi and both normal orders."""

    def __init__(self, spec: SpaceSpec, rmat: RMatrix, constant_k: QScalar | None = None):
        if set(rmat.labels) != set(spec.generators):
            raise ValueError("braiding labels do not match space generators")
        self.space = spec
        self.rmatrix = rmat
        self.k = constant_k if constant_k is not None else rmat.constant_k
        self.momentum_generators = tuple(momentum_name(g) for g in spec.generators)
        self._specs: dict[tuple, SpaceSpec] = {}

    # -- combined rewrite systems -----------------------------------------

    def combined_spec(self, calculus: str, order: str = "xp",
                      inhomogeneous: str = "momentum") -> SpaceSpec:
        """Extended SpaceSpec; ``order`` 'xp' puts coordinates first.

        ``inhomogeneous`` selects i*g (momentum convention, P = i d) or plain
        g (derivative convention) as the constant term of the mixed rule.
        """
        key = (calculus, order, inhomogeneous)
        if key in self._specs:
            return self._specs[key]
        spec = self.space
        xg = spec.generators
        pg = self.momentum_generators
        gens = xg + pg if order == "xp" else pg + xg
        relations = dict(spec.relations)
        relations.update(_mirror_relations(spec))
        scale = I if inhomogeneous == "momentum" else ONE
        metric = spec.metric if calculus == UNHATTED else _conjugate_metric(spec)
        if order == "xp":
            matrix = self.rmatrix.inverse_entries() if calculus == UNHATTED else self.rmatrix.entries
            const = self.k if calculus == UNHATTED else _unit_inverse(self.k)
            for k_ in xg:
                for l_ in xg:
                    combo = []
                    for m_ in xg:
                        for n_ in xg:
                            c = matrix.get((k_, l_, m_, n_))
                            if c is not None and not c.is_zero():
                                combo.append(((m_, momentum_name(n_)), c * const))
                    g = metric.get((k_, l_))
                    if g is not None and not g.is_zero():
                        combo.append(((), g * scale))
                    relations[(momentum_name(k_), l_)] = combo
        else:
            # coordinate past momentum: invert the mixed rule
            matrix = self.rmatrix.entries if calculus == UNHATTED else self.rmatrix.inverse_entries()
            const = _unit_inverse(self.k) if calculus == UNHATTED else self.k
            for i_ in xg:
                for j_ in xg:
                    combo = []
                    inhom = QScalar.zero()
                    for k_ in xg:
                        for l_ in xg:
                            c = matrix.get((i_, j_, k_, l_))
                            if c is None or c.is_zero():
                                continue
                            combo.append(((momentum_name(k_), l_), c * const))
                            g = metric.get((k_, l_))
                            if g is not None:
                                inhom = inhom + c * g
                    inhom = -(inhom * const * scale)
                    if not inhom.is_zero():
                        combo.append(((), inhom))
                    relations[(i_, momentum_name(j_))] = combo
        out = SpaceSpec(
            name="%s_phase_%s_%s_%s" % (spec.name, calculus, order, inhomogeneous),
            generators=gens,
            relations=relations,
            metric=dict(spec.metric),
            metric_inverse=dict(spec.metric_inverse),
            conjugation={},
            kappa_bosonic=spec.kappa_bosonic,
            kappa_grassmann=spec.kappa_grassmann,
            lattice_steps=spec.lattice_steps,
            lattice_prefactors=spec.lattice_prefactors,
        )
        self._specs[key] = out
        return out

    # -- operations ---------------------------------------------------------

    def normal_order(self, raw: list[tuple[Word, QScalar]], calculus: str = UNHATTED) -> NCPoly:
        """Normal form of a mixed coordinate/momentum word polynomial."""
        spec = self.combined_spec(calculus, "xp", "momentum")
        acc: TermMap = {}
        for word, coeff in raw:
            _add_scaled(acc, normal_word(spec, tuple(word)), coeff)
        return NCPoly(spec, acc)

    def derivative_action(self, calculus: str, side: str, index: str, f: NCPoly) -> NCPoly:
        """Apply d^index to a coordinate element from the given side.

        The right action flips the sign of the vacuum extraction: pulling a
        derivative out of f*d picks up the integration-by-parts sign, and the
        action convention absorbs it so that both sides reduce to the
        classical partial derivative at q = 1.
        """
        if calculus not in CALCULI or side not in SIDES:
            raise ValueError("unknown derivative kind (%r, %r)" % (calculus, side))
        spec = self.space
        spec.position(index)
        d = momentum_name(index)
        if side == LEFT:
            combined = self.combined_spec(calculus, "xp", "derivative")
            build = lambda w: (d,) + w
            sign = ONE
        else:
            combined = self.combined_spec(calculus, "px", "derivative")
            build = lambda w: w + (d,)
            sign = -ONE
        acc: TermMap = {}
        pset = set(self.momentum_generators)
        for word, coeff in f.terms.items():
            nf = normal_word(combined, build(word))
            for w, c in nf.items():
                if not any(g in pset for g in w):
                    cur = acc.get(w, QScalar.zero()) + c * coeff * sign
                    if cur.is_zero():
                        acc.pop(w, None)
                    else:
                        acc[w] = cur
        return NCPoly(spec, acc)

    def momentum_action(self, calculus: str, side: str, index: str, f: NCPoly) -> NCPoly:
        """P^index acting as i times the derivative action."""
        return self.derivative_action(calculus, side, index, f).scale(I)


def _unit_inverse(c: QScalar) -> QScalar:
    return divexact(ONE, c)


_CACHE: dict[str, PhaseAlgebra] = {}


def phase_algebra(space_name: str) -> PhaseAlgebra:
    if space_name not in _CACHE:
        spec = space(space_name)
        _CACHE[space_name] = PhaseAlgebra(spec, load_rmatrix(space_name))
    return _CACHE[space_name]


# -- calibration of the mixed-rule constant -----------------------------------

def cross_rule_remainder(alg: PhaseAlgebra, calculus: str = UNHATTED,
                         use_momentum_relations: bool = False) -> TermMap:
    """Momentum-free residue of rewriting P against each defining relation.

    Zero means the mixed rule is compatible with the relation ideal; with
    ``use_momentum_relations`` the roles are reversed and the momentum
    relations are pushed against a coordinate instead.
    """
    spec = alg.space
    pset = set(alg.momentum_generators)
    out: TermMap = {}
    if use_momentum_relations:
        pairs = [
            ((momentum_name(a), momentum_name(b)),
             [(tuple(momentum_name(g) for g in w), c) for w, c in combo])
            for (a, b), combo in spec.relations.items()
        ]
        probes = spec.generators
        attach = lambda word, x: word + (x,)
    else:
        pairs = list(spec.relations.items())
        probes = alg.momentum_generators
        attach = lambda word, p: (p,) + word
    for (a, b), combo in pairs:
        for probe in probes:
            lhs = alg.normal_order([(attach((a, b), probe), ONE)], calculus)
            rhs = alg.normal_order([(attach(w, probe), c) for w, c in combo], calculus)
            diff = lhs - rhs
            for w, c in diff.terms.items():
                if not any(g in pset for g in w):
                    key = ((a, b), probe) + w
                    cur = out.get(key, QScalar.zero()) + c
                    if cur.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = cur
    return out


def derive_cross_constant(spec: SpaceSpec, rmat: RMatrix, calculus: str = UNHATTED) -> QScalar:
    """Solve for the constant that makes the mixed rule respect the relations.

    The momentum-free residue of rewriting P^i (L - R) is affine in the
    effective constant multiplying the braiding; two probe values determine
    it, and the root must be shared by every relation.  Returns the canonical
    constant (the hatted calculus carries its inverse).
    """
    q = QScalar.q_power(1)
    if calculus == UNHATTED:
        probe_ks = [ONE, q]           # effective constant e = k
        effs = [ONE, q]
    else:
        probe_ks = [ONE, _unit_inverse(q)]  # e = 1/k
        effs = [ONE, q]
    r_at = []
    for ck in probe_ks:
        alg = PhaseAlgebra(spec, rmat, constant_k=ck)
        r_at.append(cross_rule_remainder(alg, calculus))
    keys = set(r_at[0]) | set(r_at[1])
    # remainder(key) = B + A*e with e the effective constant
    solution: QScalar | None = None
    de = effs[1] - effs[0]
    for key in sorted(keys):
        r0 = r_at[0].get(key, QScalar.zero())
        r1 = r_at[1].get(key, QScalar.zero())
        a = divexact(r1 - r0, de)
        b = r0 - a * effs[0]
        if a.is_zero():
            if not b.is_zero():
                raise ValueError("mixed rule cannot be calibrated: constant remainder")
            continue
        cand = divexact(-b, a)
        if solution is None:
            solution = cand
        elif solution != cand:
            raise ValueError("mixed rule calibration is inconsistent across relations")
    if solution is None:
        raise ValueError("relations put no constraint on the mixed-rule constant")
    k = solution if calculus == UNHATTED else _unit_inverse(solution)
    check = PhaseAlgebra(spec, rmat, constant_k=k)
    if cross_rule_remainder(check, calculus):
        raise ValueError("calibration check failed for %r" % spec.name)
    return k
