"""Pure-Python reduction kernel over flat preorder term codes.

A term is a list of ints in preorder: ``APP`` and ``LAM`` markers, de
Bruijn indices (``>= 0``) and free variables (``<= FREE_BASE``, encoded as
``FREE_BASE - id``).  Contracting a redex rewrites one contiguous slice, and
the leftmost-outermost redex is the first ``APP`` directly followed by
``LAM``.

Every entry point mirrors ``_ckernel`` exactly; results must be identical.
"""

LAM = -1
APP = -2
FREE_BASE = -3

REACHED = 0
FUEL_EXHAUSTED = 1
SPACE_EXHAUSTED = 2


def extent(code, i):
    """Index one past the end of the subterm starting at ``i``."""
    need = 1
    while need:
        t = code[i]
        i += 1
        if t == APP:
            need += 1
        elif t != LAM:
            need -= 1
    return i


def _shifted(arg, by, out):
    if by == 0:
        out.extend(arg)
        return
    stack = [0]
    for t in arg:
        e = stack.pop()
        if t == APP:
            stack.append(e)
            stack.append(e)
            out.append(t)
        elif t == LAM:
            stack.append(e + 1)
            out.append(t)
        elif t >= e:
            out.append(t + by)
        else:
            out.append(t)


def contract(code, r):
    """Contract the redex whose APP marker sits at ``r``."""
    bs = r + 2
    be = extent(code, bs)
    ae = extent(code, be)
    arg = code[be:ae]
    out = code[:r]
    stack = [0]
    for i in range(bs, be):
        t = code[i]
        d = stack.pop()
        if t == APP:
            stack.append(d)
            stack.append(d)
            out.append(t)
        elif t == LAM:
            stack.append(d + 1)
            out.append(t)
        elif t == d:
            _shifted(arg, d, out)
        elif t > d:
            out.append(t - 1)
        else:
            out.append(t)
    out.extend(code[ae:])
    return out


contract_at = contract


def contracted_length(code, r):
    bs = r + 2
    be = extent(code, bs)
    ae = extent(code, be)
    occ = 0
    stack = [0]
    for i in range(bs, be):
        t = code[i]
        d = stack.pop()
        if t == APP:
            stack.append(d)
            stack.append(d)
        elif t == LAM:
            stack.append(d + 1)
        elif t == d:
            occ += 1
    return len(code) - 2 - (ae - be) + occ * (ae - be - 1)


def head_redex(code):
    """Position of the head redex, or -1 when ``code`` is a head normal form."""
    i = 0
    while code[i] == LAM:
        i += 1
    j = i
    while code[j] == APP:
        j += 1
    if j > i and code[j] == LAM:
        return j - 1
    return -1


def leftmost_redex(code, start=0):
    n = len(code) - 1
    for i in range(max(start, 0), n):
        if code[i] == APP and code[i + 1] == LAM:
            return i
    return -1


def _run(code, fuel, max_nodes, trace_limit, head_only):
    code = list(code)
    trace = [list(code)] if trace_limit > 0 else None
    steps = 0
    start = 0
    while True:
        r = head_redex(code) if head_only else leftmost_redex(code, start)
        if r < 0:
            return REACHED, code, steps, trace
        if steps >= fuel:
            return FUEL_EXHAUSTED, code, steps, trace
        if contracted_length(code, r) > max_nodes:
            return SPACE_EXHAUSTED, code, steps, trace
        code = contract(code, r)
        steps += 1
        start = r - 1
        if trace is not None and len(trace) <= trace_limit:
            trace.append(list(code))


def head_reduce(code, fuel, max_nodes, trace_limit=0):
    return _run(code, fuel, max_nodes, trace_limit, True)


def normalize(code, fuel, max_nodes, trace_limit=0):
    return _run(code, fuel, max_nodes, trace_limit, False)
