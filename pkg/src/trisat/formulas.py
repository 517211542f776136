"""Closed-form saturation values and bounds, with hypothesis tracking.

Every function returns a :class:`BoundRecord` whose ``value`` is the exact
integer of the closed form (Python integers are arbitrary precision, so
hosts up to 10^9 and beyond evaluate without overflow) and whose
``hypothesis_satisfied`` flag evaluates the stated parameter inequalities
literally.  An asymptotic "n sufficiently large" hypothesis can never be
certified by a finite check; such records carry ``hypothesis_satisfied =
False`` plus an explanatory note, never a silent True.

Shape preconditions (orderings, positivity) raise :class:`FormulaError`;
size thresholds only toggle the hypothesis flag.
"""

from __future__ import annotations

from dataclasses import dataclass


class FormulaError(ValueError):
    """Arguments outside a formula's shape preconditions."""


@dataclass(frozen=True)
class BoundRecord:
    """A named closed-form value with its parameter hypotheses."""

    name: str
    params: dict
    value: int
    kind: str  # "exact" | "upper" | "lower" | "reference"
    hypothesis_satisfied: bool
    anchor: str
    note: str = ""

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "params": dict(self.params),
            "value": self.value,
            "kind": self.kind,
            "hypothesis_satisfied": self.hypothesis_satisfied,
            "anchor": self.anchor,
            "note": self.note,
        }


def _check_host_order(n1: int, n2: int, n3: int) -> None:
    if not n1 >= n2 >= n3 >= 1:
        raise FormulaError(f"host sizes must satisfy n1 >= n2 >= n3 >= 1, got ({n1},{n2},{n3})")


def t_of(l: int, m: int) -> int:
    """Hub-triangle size floor((l - m) / 2) used by the balanced constructions."""
    return (l - m) // 2


def f_con1_upper(n1: int, n2: int, n3: int, l: int, m: int) -> BoundRecord:
    """Edge count of the hub construction for K_{l,m,m}, an upper bound on sat."""
    _check_host_order(n1, n2, n3)
    if not l >= m >= 1:
        raise FormulaError(f"need l >= m >= 1, got l={l}, m={m}")
    value = 2 * m * (n1 + n2 + n3) + (l - m) * (n2 + 2 * n3) - 3 * l * m - 3
    hyp = n3 >= max(l + 2, 3 * l - 2 * m - 1)
    return BoundRecord(
        name="con1_upper",
        params={"n1": n1, "n2": n2, "n3": n3, "l": l, "m": m},
        value=value, kind="upper", hypothesis_satisfied=hyp,
        anchor="K_{l,m,m}-saturated hub construction in K_{n1,n2,n3}")


def f_con3_upper(n1: int, n2: int, n3: int, l: int, m: int, p: int) -> BoundRecord:
    """Edge count of the small-hub construction for K_{l,m,p}, m > p."""
    _check_host_order(n1, n2, n3)
    if not (l >= m > p >= 1):
        raise FormulaError(f"need l >= m > p >= 1, got l={l}, m={m}, p={p}")
    value = (2 * (m - 1) * (n1 + n2 + n3) + (l - m) * (n2 + 2 * n3)
             - 3 * l * (m - 1) + 3 * m - 3)
    hyp = n3 >= l
    return BoundRecord(
        name="con3_upper",
        params={"n1": n1, "n2": n2, "n3": n3, "l": l, "m": m, "p": p},
        value=value, kind="upper", hypothesis_satisfied=hyp,
        anchor="K_{l,m,p}-saturated small-hub construction in K_{n1,n2,n3}")


def f_con4_upper(n: int, l: int, m: int) -> BoundRecord:
    """Edge count of the balanced-host construction for K_{l,m,m}."""
    if not l >= m >= 1:
        raise FormulaError(f"need l >= m >= 1, got l={l}, m={m}")
    if n < 1:
        raise FormulaError(f"need n >= 1, got n={n}")
    t = t_of(l, m)
    value = 3 * (l + m) * n - 3 * (l - m - t) * t - 3 * l * m - 3
    hyp = n >= max(l + 2, 3 * l + t - 2 * m - 2)
    return BoundRecord(
        name="con4_upper", params={"n": n, "l": l, "m": m},
        value=value, kind="upper", hypothesis_satisfied=hyp,
        anchor="K_{l,m,m}-saturated hub-and-triangle construction in K_{n,n,n}")


def f_con5_upper(n: int, l: int, m: int, p: int) -> BoundRecord:
    """Edge count of the balanced-host construction for K_{l,m,p}, m > p."""
    if not (l >= m > p >= 1):
        raise FormulaError(f"need l >= m > p >= 1, got l={l}, m={m}, p={p}")
    if n < 1:
        raise FormulaError(f"need n >= 1, got n={n}")
    t = t_of(l, m)
    value = 3 * (l + m - 2) * n - 3 * (m - 1) * (l - 1) + 3 * t * t - 3 * (l - m) * t
    hyp = n >= l + t - 1
    return BoundRecord(
        name="con5_upper", params={"n": n, "l": l, "m": m, "p": p},
        value=value, kind="upper", hypothesis_satisfied=hyp,
        anchor="K_{l,m,p}-saturated hub-and-triangle construction in K_{n,n,n}")


def f_sat_lll(n1: int, n2: int, n3: int, l: int) -> BoundRecord:
    """Exact saturation number of K_{l,l,l} in K_{n1,n2,n3} for large parts.

    Exact once n3 >= 32 l^3 + 40 l^2 + 11 l; below the threshold the value is
    still attained by a construction, hence an upper bound.
    """
    _check_host_order(n1, n2, n3)
    if l < 1:
        raise FormulaError(f"need l >= 1, got {l}")
    value = 2 * l * (n1 + n2 + n3) - 3 * l * l - 3
    threshold = 32 * l**3 + 40 * l**2 + 11 * l
    hyp = n3 >= threshold
    return BoundRecord(
        name="sat_lll", params={"n1": n1, "n2": n2, "n3": n3, "l": l},
        value=value, kind="exact" if hyp else "upper", hypothesis_satisfied=hyp,
        anchor="saturation number of the balanced pattern K_{l,l,l}",
        note="" if hyp else f"below size threshold n3 >= {threshold}; value remains an upper bound")


def f_sat_lll1(n1: int, n2: int, n3: int, l: int) -> BoundRecord:
    """Exact saturation number of K_{l,l,l-1} in K_{n1,n2,n3} for large parts."""
    _check_host_order(n1, n2, n3)
    if l < 2:
        raise FormulaError(f"pattern K_(l,l,l-1) needs l >= 2, got {l}")
    k = l - 1
    value = 2 * k * (n1 + n2 + n3) - 3 * k * k
    threshold = 32 * k**3 + 40 * k**2 + 11 * k
    hyp = n3 >= threshold
    return BoundRecord(
        name="sat_lll1", params={"n1": n1, "n2": n2, "n3": n3, "l": l},
        value=value, kind="exact" if hyp else "upper", hypothesis_satisfied=hyp,
        anchor="saturation number of the near-balanced pattern K_{l,l,l-1}",
        note="" if hyp else f"below size threshold n3 >= {threshold}; value remains an upper bound")


def f_lll2_lower(n: int, l: int) -> BoundRecord:
    """Lower bound 6(l-1)n - (72 l^2 - 40 l + 54) for K_{l,l,l-2} in K_{n,n,n}.

    Holds for n sufficiently large; that asymptotic hypothesis cannot be
    certified at finite n, so the flag is always False with a note.
    """
    if l < 3:
        raise FormulaError(f"pattern K_(l,l,l-2) lower bound needs l >= 3, got {l}")
    if n < 1:
        raise FormulaError(f"need n >= 1, got n={n}")
    value = 6 * (l - 1) * n - (72 * l * l - 40 * l + 54)
    return BoundRecord(
        name="lll2_lower", params={"n": n, "l": l},
        value=value, kind="lower", hypothesis_satisfied=False,
        anchor="additive-constant lower bound for K_{l,l,l-2} in K_{n,n,n}",
        note="valid for n sufficiently large; an asymptotic hypothesis is never certified at finite n")


def f_c4(n1: int, n2: int, n3: int) -> BoundRecord:
    """Exact saturation number n1 + n2 + n3 of the four-cycle C4 = K_{2,2}."""
    _check_host_order(n1, n2, n3)
    return BoundRecord(
        name="c4", params={"n1": n1, "n2": n2, "n3": n3},
        value=n1 + n2 + n3, kind="exact", hypothesis_satisfied=n3 >= 2,
        anchor="saturation number of C4 in K_{n1,n2,n3}")


# -- reference values from the classical literature ---------------------------

def f_ehm(n: int, k: int) -> BoundRecord:
    """Erdos-Hajnal-Moon: sat(n, K_k) = (k-2) n - C(k-1, 2)."""
    if k < 2 or n < 1:
        raise FormulaError(f"need k >= 2 and n >= 1, got k={k}, n={n}")
    value = (k - 2) * n - (k - 1) * (k - 2) // 2
    return BoundRecord(
        name="ehm", params={"n": n, "k": k},
        value=value, kind="reference", hypothesis_satisfied=n >= k,
        anchor="Erdos-Hajnal-Moon clique saturation number")


def f_bw(n1: int, n2: int, l: int, m: int) -> BoundRecord:
    """Bollobas-Wessel: ordered bipartite-in-bipartite saturation number."""
    if n1 < 1 or n2 < 1:
        raise FormulaError(f"need positive part sizes, got ({n1},{n2})")
    value = (m - 1) * n1 + (l - 1) * n2 - (m - 1) * (l - 1)
    hyp = 2 <= l <= n1 and 2 <= m <= n2
    return BoundRecord(
        name="bw", params={"n1": n1, "n2": n2, "l": l, "m": m},
        value=value, kind="reference", hypothesis_satisfied=hyp,
        anchor="Bollobas-Wessel ordered bipartite saturation number")


def f_ms_upper(n: int, l: int, m: int) -> BoundRecord:
    """Moshkovitz-Shapira upper bound (l+m-2) n - floor(((l+m-2)/2)^2)."""
    if l < 1 or m < 1 or n < 1:
        raise FormulaError(f"need positive parameters, got n={n}, l={l}, m={m}")
    k = l + m - 2
    value = k * n - (k * k) // 4
    return BoundRecord(
        name="ms_upper", params={"n": n, "l": l, "m": m},
        value=value, kind="reference", hypothesis_satisfied=l >= 2 and m >= 2,
        anchor="Moshkovitz-Shapira bipartite-host upper bound")


def f_gks_lower(n: int, l: int, m: int) -> BoundRecord:
    """Gan-Korandi-Sudakov lower bound (l+m-2) n - (l+m-2)^2."""
    if l < 1 or m < 1 or n < 1:
        raise FormulaError(f"need positive parameters, got n={n}, l={l}, m={m}")
    k = l + m - 2
    value = k * n - k * k
    return BoundRecord(
        name="gks_lower", params={"n": n, "l": l, "m": m},
        value=value, kind="reference", hypothesis_satisfied=l >= 2 and m >= 2,
        anchor="Gan-Korandi-Sudakov bipartite-host lower bound")


def f_fjpw(k: int, n: int) -> BoundRecord:
    """Ferrara-Jacobson-Pfender-Wenger triangle saturation in balanced k-partite hosts.

    min{2kn + n^2 - 4k - 1, 3kn - 3n - 6}, stated for k >= 3 and n >= 100.
    """
    if k < 1 or n < 1:
        raise FormulaError(f"need positive parameters, got k={k}, n={n}")
    value = min(2 * k * n + n * n - 4 * k - 1, 3 * k * n - 3 * n - 6)
    return BoundRecord(
        name="fjpw", params={"k": k, "n": n},
        value=value, kind="reference", hypothesis_satisfied=k >= 3 and n >= 100,
        anchor="Ferrara-Jacobson-Pfender-Wenger multipartite triangle saturation number")


# Registry for the CLI: name -> (callable, ordered parameter names).
FORMULAS = {
    "con1_upper": (f_con1_upper, ("n1", "n2", "n3", "l", "m")),
    "con3_upper": (f_con3_upper, ("n1", "n2", "n3", "l", "m", "p")),
    "con4_upper": (f_con4_upper, ("n", "l", "m")),
    "con5_upper": (f_con5_upper, ("n", "l", "m", "p")),
    "sat_lll": (f_sat_lll, ("n1", "n2", "n3", "l")),
    "sat_lll1": (f_sat_lll1, ("n1", "n2", "n3", "l")),
    "lll2_lower": (f_lll2_lower, ("n", "l")),
    "c4": (f_c4, ("n1", "n2", "n3")),
    "ehm": (f_ehm, ("n", "k")),
    "bw": (f_bw, ("n1", "n2", "l", "m")),
    "ms_upper": (f_ms_upper, ("n", "l", "m")),
    "gks_lower": (f_gks_lower, ("n", "l", "m")),
    "fjpw": (f_fjpw, ("k", "n")),
}


def evaluate(name: str, params: dict) -> BoundRecord:
    """Evaluate a registered formula from a {param: int} mapping."""
    if name not in FORMULAS:
        raise FormulaError(f"unknown formula {name!r}; known: {sorted(FORMULAS)}")
    fn, wanted = FORMULAS[name]
    missing = [p for p in wanted if p not in params]
    extra = [p for p in params if p not in wanted]
    if missing or extra:
        raise FormulaError(
            f"formula {name} takes parameters {wanted}; missing {missing}, unknown {extra}")
    return fn(**{p: params[p] for p in wanted})
