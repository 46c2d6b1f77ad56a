"""Regenerate classical_nu1.csv by iterating q(t+1) = q(t) + α q(t) Φ(t) directly.

Run from the repository root: ``python3 tests/fixtures/make_classical_fixture.py``.
"""

from pathlib import Path

a1, a2, b, d, c1, c2 = 0.45, 0.12, 6.0, 4.1, 0.2, 0.3
q1, q2 = 0.3, 0.3
lines = ["n,q1,q2,price,profit1,profit2"]
for n in range(101):
    p = b - d * (q1 + q2)
    lines.append(
        ",".join(
            [str(n)]
            + [f"{v:.17g}" for v in (q1, q2, p, p * q1 - 0.5 * c1 * q1 * q1, p * q2 - 0.5 * c2 * q2 * q2)]
        )
    )
    q1, q2 = (
        q1 + a1 * q1 * (b - (c1 + 2.0 * d) * q1 - d * q2),
        q2 + a2 * q2 * (b - (c2 + 2.0 * d) * q2 - d * q1),
    )
Path(__file__).with_name("classical_nu1.csv").write_text("\n".join(lines) + "\n")
