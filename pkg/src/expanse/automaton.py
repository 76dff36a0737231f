"""Derived-term automata, built from expansions either eagerly or on demand."""

import json
from collections import deque

from .errors import StateCapExceeded, UnknownLetter
from .expand import expand, validate

DEFAULT_STATE_CAP = 10000


class Automaton:
    """Weighted automaton whose states are labeled by expressions.

    ``step(expr)`` supplies the expansion of a state.  States are numbered in
    discovery order (breadth first), the initial one being 0.  States in
    ``frontier`` are known but their outgoing transitions and final weight
    have not been computed yet; a strict build leaves it empty.
    """

    def __init__(self, ctx, root, step, deterministic=False, normalized=False, state_cap=None):
        self.ctx = ctx
        self.deterministic = deterministic
        self.normalized = normalized
        self.state_cap = state_cap
        self.states = []
        self.initial = {}
        self.final = {}
        self.transitions = {}
        self.frontier = set()
        self._step = step
        self._index = {}
        self._queue = deque()
        self.initial[self._add_state(root)] = ctx.domain.one

    def __repr__(self):
        kind = "lazy " if self.frontier else ""
        return f"<{kind}Automaton {len(self.states)} states over {self.ctx!r}>"

    def __len__(self):
        return len(self.states)

    def _add_state(self, e):
        i = self._index.get(e)
        if i is None:
            if self.state_cap is not None and len(self.states) >= self.state_cap:
                raise StateCapExceeded(self.state_cap)
            i = len(self.states)
            self.states.append(e)
            self._index[e] = i
            self.frontier.add(i)
            self._queue.append(i)
        return i

    def index(self, e):
        return self._index[e]

    def expand_state(self, i):
        """Materialize the final weight and outgoing transitions of state ``i``."""
        if i not in self.frontier:
            return
        x = self._step(self.states[i])
        if x.constant != self.ctx.domain.zero:
            self.final[i] = x.constant
        for a in x.firsts:
            self.transitions[i, a] = [(self._add_state(e), k) for e, k in x.parts[a].items()]
        self.frontier.discard(i)

    def explore(self):
        """Expand every reachable state, breadth first."""
        while self._queue:
            i = self._queue.popleft()
            self.expand_state(i)
        return self

    # -- queries ----

    def successors(self, i, a):
        self.expand_state(i)
        return self.transitions.get((i, a), ())

    def final_weight(self, i):
        self.expand_state(i)
        return self.final.get(i, self.ctx.domain.zero)

    def step_vector(self, vec, a):
        """Push a state->weight vector through one letter."""
        if a not in self.ctx.alphabet:
            raise UnknownLetter(a)
        dom = self.ctx.domain
        out = {}
        for i, w in vec.items():
            for j, t in self.successors(i, a):
                v = dom.mul(w, t)
                out[j] = dom.add(out[j], v) if j in out else v
        return {j: v for j, v in out.items() if v != dom.zero}

    def read_out(self, vec):
        dom = self.ctx.domain
        return dom.sum(dom.mul(w, self.final_weight(i)) for i, w in vec.items())

    def evaluate(self, word):
        """Weight of ``word``: sum over all paths, computed by vector propagation."""
        vec = dict(self.initial)
        for a in word:
            vec = self.step_vector(vec, a)
            if not vec:
                break
        return self.read_out(vec)

    __call__ = evaluate

    def transition_list(self):
        """``(src, letter, dst, weight)`` tuples in (src, letter) order."""
        out = []
        for (i, a), succ in sorted(self.transitions.items()):
            out += [(i, a, j, k) for j, k in succ]
        return out

    def is_deterministic(self):
        return all(len(succ) <= 1 for succ in self.transitions.values())

    def labeled_transitions(self):
        """Transitions with states replaced by their expression labels."""
        return {(self.states[i], a, self.states[j], k) for i, a, j, k in self.transition_list()}

    def labeled_finals(self):
        return {self.states[i]: k for i, k in self.final.items()}

    # -- export ----

    def to_dot(self):
        fmt = self.ctx.domain.format
        one = self.ctx.domain.one
        lines = ["digraph {", "  rankdir=LR", "  node [shape=box, style=rounded]"]
        for i, e in enumerate(self.states):
            style = ", style=dashed" if i in self.frontier else ""
            lines.append(f'  {i} [label="{_dot_escape(str(e))}"{style}]')
        for i, k in sorted(self.initial.items()):
            lines.append(f"  I{i} [shape=point, style=invis]")
            lines.append(f"  I{i} -> {i}{_dot_weight(k, one, fmt)}")
        for i, k in sorted(self.final.items()):
            lines.append(f"  F{i} [shape=point, style=invis]")
            lines.append(f"  {i} -> F{i}{_dot_weight(k, one, fmt)}")
        for i, a, j, k in self.transition_list():
            label = a if k == one else f"<{fmt(k)}>{a}"
            lines.append(f'  {i} -> {j} [label="{_dot_escape(label)}"]')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_dict(self):
        fmt = self.ctx.domain.format
        d = {
            "context": {"alphabet": "".join(self.ctx.alphabet), "weights": self.ctx.domain.kind.lower()},
            "states": [str(e) for e in self.states],
            "initial": {str(i): fmt(k) for i, k in sorted(self.initial.items())},
            "final": {str(i): fmt(k) for i, k in sorted(self.final.items())},
            "transitions": [[i, a, j, fmt(k)] for i, a, j, k in self.transition_list()],
        }
        if self.frontier:
            d["frontier"] = sorted(self.frontier)
        return d

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)


def _dot_escape(s):
    return s.replace("\\", "\\\\").replace('"', '\\"')


def _dot_weight(k, one, fmt):
    return "" if k == one else f' [label="<{_dot_escape(fmt(k))}>"]'


def expansion_step(deterministic=False, normalized=False):
    def step(e):
        x = expand(e)
        return x.det(normalized) if deterministic else x
    return step


def build(e, ctx=None, deterministic=False, normalized=False, state_cap=DEFAULT_STATE_CAP):
    """Strict derived-term automaton of ``e``; raises StateCapExceeded past ``state_cap`` states."""
    ctx = ctx or e.ctx
    validate(e, ctx)
    a = Automaton(ctx, e, expansion_step(deterministic, normalized),
                  deterministic, normalized, state_cap)
    return a.explore()


def build_lazy(e, ctx=None, deterministic=False, normalized=False):
    """Derived-term automaton whose states are expanded only when a query reaches them."""
    ctx = ctx or e.ctx
    validate(e, ctx)
    return Automaton(ctx, e, expansion_step(deterministic, normalized), deterministic, normalized)


def evaluate(aut, word):
    return aut.evaluate(word)


def to_dot(aut):
    return aut.to_dot()
