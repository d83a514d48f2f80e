"""
Mixing verdicts and explicit gap certificates
=============================================

Deciding that a shift mixes is cheap; the useful part is the constant.
For each bundled shift this script prints the irreducibility and mixing
verdicts, then the strong-irreducibility certificate whose N0 bound
promises: any two language words can be glued at every separation of at
least N0.  The exact least gap is computed as well, so the slack of the
certified bound is visible.
"""

from soficlab import (ConfigurationWindow, GlueRequest, bundled_names,
                      bundled_shift, gap_witness, glue, is_irreducible,
                      is_mixing, minimal_gap, si_certificate, NotMixing)

shift_names, _ = bundled_names()

print(f"{'shift':10s} {'irr':>5s} {'mix':>5s} {'N0':>4s} {'least gap':>10s}")
for name in shift_names:
    x = bundled_shift(name)
    irr = is_irreducible(x).verdict
    mix = is_mixing(x).mixing
    try:
        cert = si_certificate(x)
        n0 = str(cert.N0_bound)
        gap = str(minimal_gap(x))
    except NotMixing:
        n0, gap = "-", "-"
    print(f"{name:10s} {str(irr):>5s} {str(mix):>5s} {n0:>4s} {gap:>10s}")

# the even shift needs gap 2: gluing '01' to '10' works at separation 0
# (the runs merge to '11') but fails at separation 1, where any single
# fill symbol closes an odd run of ones; the least uniform gap is the
# point where feasibility stops having holes
even = bundled_shift("even")
u, v = even.word("01"), even.word("10")
for n in (0, 1, 2, 3):
    fill = gap_witness(even, u, v, n)
    shown = repr(fill.text) if fill is not None else "impossible"
    print(f"glue {u.text!r} + (n={n}) + {v.text!r}: {shown}")

# multi-part gluing places whole words at requested positions
golden = bundled_shift("golden")
req = GlueRequest((ConfigurationWindow(0, golden.word("101")),
                   ConfigurationWindow(7, golden.word("1001"))), 4)
win = glue(golden, req)
print("\ngolden glue at positions 0 and 7:", win.word.text)
