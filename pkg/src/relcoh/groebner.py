"""Buchberger's algorithm for ideals and submodules of free modules.

Internally an element of R^m is a dict ``{(component, exponents): coefficient}``;
ideal elements live in component 0.  Pairs are pruned with the
Gebauer-Moeller criteria and selected by the sugar strategy (smallest sugar
degree, then smallest lcm), which keeps elimination orders on inhomogeneous
input from wandering into high degrees.
"""

from __future__ import annotations

from .poly import Field, MonomialOrder


def _divides(a, b) -> bool:
    if a[0] != b[0]:
        return False
    return all(x <= y for x, y in zip(a[1], b[1]))


def _lcm(a, b):
    return (a[0], tuple(max(x, y) for x, y in zip(a[1], b[1])))


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a[1], b[1]))


def _degree(f) -> int:
    return max(sum(m[1]) for m in f) if f else 0


def _pair_sugar(polys, sugar, i, j) -> int:
    L = sum(_lcm(polys[i][1], polys[j][1])[1])
    return max(sugar[i] + L - sum(polys[i][1][1]), sugar[j] + L - sum(polys[j][1][1]))


class Engine:
    """Reduction and Buchberger completion for one field and term order.

    ``pot`` selects position-over-term (lower component index is larger),
    otherwise term-over-position.  For ideals (``module=False``) the product
    criterion is enabled.
    """

    def __init__(self, field: Field, order: MonomialOrder, module: bool = False, pot: bool = True):
        self.field = field
        self.order = order
        self.module = module
        okey = order.key
        if not module:
            self.key = lambda m: okey(m[1])
        elif pot:
            self.key = lambda m: (-m[0], okey(m[1]))
        else:
            self.key = lambda m: (okey(m[1]), -m[0])

    # -- elementary operations
    def lead(self, f):
        return max(f, key=self.key)

    def _sub_multiple(self, f, g, coef, shift):
        """f -= coef * x^shift * g, in place."""
        F = self.field
        p = F.characteristic
        for (comp, e), c in g.items():
            m = (comp, tuple(a + b for a, b in zip(e, shift)))
            if p:
                v = (f.get(m, 0) - coef * c) % p
            else:
                v = f.get(m, 0) - coef * c
            if v:
                f[m] = v
            else:
                f.pop(m, None)

    def monic(self, f):
        if not f:
            return f
        F = self.field
        inv = F.inv(f[self.lead(f)])
        return {m: F.mul(inv, c) for m, c in f.items()}

    def normal_form(self, f, basis, full: bool = True):
        """Remainder of f on division by ``basis`` (list of (poly, lm, lc)).

        With ``full=False`` only the leading term is reduced (top reduction).
        """
        F = self.field
        f = dict(f)
        rem = {}
        key = self.key
        while f:
            m = max(f, key=key)
            c = f[m]
            for g, lm, lc in basis:
                if _divides(lm, m):
                    shift = tuple(a - b for a, b in zip(m[1], lm[1]))
                    self._sub_multiple(f, g, F.mul(c, F.inv(lc)), shift)
                    break
            else:
                if not full:
                    rem.update(f)
                    return rem
                rem[m] = c
                del f[m]
        return rem

    def spoly(self, f, lf, g, lg):
        F = self.field
        L = _lcm(lf, lg)
        s = {}
        self._sub_multiple(s, f, F.neg(F.inv(f[lf])), tuple(a - b for a, b in zip(L[1], lf[1])))
        self._sub_multiple(s, g, F.inv(g[lg]), tuple(a - b for a, b in zip(L[1], lg[1])))
        return s

    def _is_unit(self, lm):
        return not self.module and not any(lm[1])

    # -- completion
    def buchberger(self, gens, stop_on_unit: bool = False, image_rank: int | None = None):
        """Reduced Groebner basis (list of monic dicts, decreasing leading terms).

        With ``image_rank = m`` (POT order) only elements whose leading term lies
        in a component below m are kept: the result is a Groebner basis of the
        projection to the first m components, and the remaining components are
        carried along as cofactors.  Syzygy elements are never completed.
        """
        keep = (lambda lm: True) if image_rank is None else (lambda lm: lm[0] < image_rank)
        polys = []   # all basis candidates ever added: (poly, lm)
        sugar = []   # sugar degree of each entry of polys
        G: list[int] = []
        B: list[tuple[int, int]] = []
        for f in gens:
            deg = _degree(f)
            f = self.normal_form(f, [(polys[i][0], polys[i][1], polys[i][0][polys[i][1]]) for i in G])
            if not f:
                continue
            f = self.monic(f)
            lm = self.lead(f)
            if not keep(lm):
                continue
            polys.append((f, lm))
            sugar.append(deg)
            if self._is_unit(lm):
                return [f]
            G, B = self._update(polys, G, B, len(polys) - 1)

        while B:
            best = min(range(len(B)), key=lambda t: self._pair_key(polys, sugar, B[t]))
            i, j = B.pop(best)
            fi, li = polys[i]
            fj, lj = polys[j]
            deg = _pair_sugar(polys, sugar, i, j)
            s = self.spoly(fi, li, fj, lj)
            h = self.normal_form(s, [(polys[k][0], polys[k][1], 1) for k in G])
            if not h:
                continue
            h = self.monic(h)
            lh = self.lead(h)
            if not keep(lh):
                continue
            polys.append((h, lh))
            sugar.append(deg)
            if self._is_unit(lh):
                return [h if len(h) == 1 else {lh: self.field(1)}]
            G, B = self._update(polys, G, B, len(polys) - 1)

        return self._reduce([polys[k] for k in G])

    def _pair_key(self, polys, sugar, pair):
        L = _lcm(polys[pair[0]][1], polys[pair[1]][1])
        return (_pair_sugar(polys, sugar, *pair), self.key(L))

    def _update(self, polys, G, B, h):
        lh = polys[h][1]
        lm = lambda k: polys[k][1]
        C = [g for g in G if lm(g)[0] == lh[0]]
        D = []
        while C:
            g1 = C.pop()
            L1 = _lcm(lh, lm(g1))
            if not self.module and _coprime(lh, lm(g1)):
                D.append(g1)
                continue
            if any(_divides(_lcm(lh, lm(g2)), L1) for g2 in C + D):
                continue
            D.append(g1)
        if self.module:
            E = [(g, h) for g in D]
        else:
            E = [(g, h) for g in D if not _coprime(lh, lm(g))]
        B_new = []
        for (g1, g2) in B:
            L = _lcm(lm(g1), lm(g2))
            if (not _divides(lh, L) or _lcm(lm(g1), lh) == L or _lcm(lm(g2), lh) == L):
                B_new.append((g1, g2))
        B_new.extend(E)
        G_new = [g for g in G if not _divides(lh, lm(g))]
        G_new.append(h)
        return G_new, B_new

    def _reduce(self, items):
        items = sorted(items, key=lambda t: self.key(t[1]))
        minimal = []
        for f, lm in items:
            if not any(_divides(l2, lm) for _, l2 in minimal):
                minimal.append((f, lm))
        out = []
        for idx, (f, lm) in enumerate(minimal):
            others = [(g, l2, g[l2]) for k, (g, l2) in enumerate(minimal) if k != idx]
            r = self.normal_form(f, others)
            out.append(self.monic(r))
        out.sort(key=lambda f: self.key(self.lead(f)), reverse=True)
        return out

    def basis_triples(self, basis):
        return [(g, self.lead(g), g[self.lead(g)]) for g in basis]
