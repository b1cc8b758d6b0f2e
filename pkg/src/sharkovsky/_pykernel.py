"""Pure-Python kernel: node arrays of Fractions.

Mirrors the API of the compiled ``_ckernel`` module.  A ``Nodes`` object is
the breakpoint list of a continuous piecewise-linear function with strictly
increasing abscissae; no self-map assumption is made here.
"""

from bisect import bisect_left, bisect_right

from .errors import ResourceError

BACKEND = "python"


class Nodes:
    __slots__ = ("_xs", "_ys")

    def __init__(self, xs, ys):
        self._xs = list(xs)
        self._ys = list(ys)

    @classmethod
    def from_fractions(cls, xs, ys):
        return cls(xs, ys)

    def xs(self):
        return list(self._xs)

    def ys(self):
        return list(self._ys)

    def __len__(self):
        return len(self._xs)

    def _value(self, y, slopes):
        # evaluate self at y; slopes[j] is the slope on [xs[j], xs[j+1]]
        xs, ys = self._xs, self._ys
        j = bisect_right(xs, y) - 1
        if j >= len(xs) - 1:
            j = len(xs) - 2
        if j < 0:
            j = 0
        return ys[j] + slopes[j] * (y - xs[j])

    def compose(self, inner, cap):
        """Nodes of ``self ∘ inner`` with collinear neighbours merged."""
        oxs, oys = self._xs, self._ys
        if len(oxs) == 1:
            return Nodes(list(inner._xs), [oys[0]] * len(inner._xs))
        slopes = [(oys[j + 1] - oys[j]) / (oxs[j + 1] - oxs[j]) for j in range(len(oxs) - 1)]
        ixs, iys = inner._xs, inner._ys
        rx, ry = [], []

        def push(x, y):
            if len(rx) >= 2:
                x0, y0, x1, y1 = rx[-2], ry[-2], rx[-1], ry[-1]
                if (y1 - y0) * (x - x1) == (y - y1) * (x1 - x0):
                    rx[-1] = x
                    ry[-1] = y
                    return
            rx.append(x)
            ry.append(y)
            if len(rx) > cap:
                raise ResourceError(f"piece cap exceeded: more than {cap} nodes", len(rx))

        push(ixs[0], self._value(iys[0], slopes))
        for i in range(len(ixs) - 1):
            xa, xb, ya, yb = ixs[i], ixs[i + 1], iys[i], iys[i + 1]
            if ya < yb:
                inv = (xb - xa) / (yb - ya)
                j = bisect_right(oxs, ya)
                stop = bisect_left(oxs, yb)
                while j < stop:
                    push(xa + (oxs[j] - ya) * inv, oys[j])
                    j += 1
            elif ya > yb:
                inv = (xb - xa) / (yb - ya)
                j = bisect_left(oxs, ya) - 1
                stop = bisect_right(oxs, yb)
                while j >= stop:
                    push(xa + (oxs[j] - ya) * inv, oys[j])
                    j -= 1
            push(xb, self._value(yb, slopes))
        return Nodes(rx, ry)

    def fixed_points(self):
        """Solutions of ``y = x``: isolated points and diagonal segments."""
        xs, ys = self._xs, self._ys
        points, diagonals = [], []
        n = len(xs)
        hs = [ys[i] - xs[i] for i in range(n)]
        for i in range(n - 1):
            ha, hb = hs[i], hs[i + 1]
            if ha == 0:
                if hb == 0:
                    if diagonals and diagonals[-1][1] == xs[i]:
                        diagonals[-1] = (diagonals[-1][0], xs[i + 1])
                    else:
                        diagonals.append((xs[i], xs[i + 1]))
                elif not diagonals or diagonals[-1][1] != xs[i]:
                    if not points or points[-1] != xs[i]:
                        points.append(xs[i])
            elif (ha < 0 < hb) or (hb < 0 < ha):
                points.append(xs[i] + ha * (xs[i + 1] - xs[i]) / (ha - hb))
        if hs[-1] == 0 and (not diagonals or diagonals[-1][1] != xs[-1]):
            if not points or points[-1] != xs[-1]:
                points.append(xs[-1])
        return points, diagonals
