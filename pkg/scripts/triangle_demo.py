"""Force f(0, 0) = 0 for the unit pair over Q(sqrt 3) and print the certificate.

Run: python scripts/triangle_demo.py
"""

from pompeiu.exactfield import ComplexElem, Field, format_complex
from pompeiu.geometry import point
from pompeiu.linsys import explain_certificate
from pompeiu.search import Problem, SearchBudget, minimize_witness, witness_search


def main() -> None:
    f = Field(3)
    problem = Problem(
        base=(point(f, 0, 0), point(f, 1, 0)),
        weights=(ComplexElem(1, 0, f), ComplexElem(1, 0, f)),
        target=point(f, 0, 0),
    )
    outcome = witness_search(problem, SearchBudget(20, 50, 8))
    if not outcome.found:
        print("no certificate:", outcome.reason)
        return
    cert = minimize_witness(outcome.rows, outcome.certificate)
    assert explain_certificate(outcome.rows, cert) is None
    print(f"explored {len(outcome.placements)} placements, {len(outcome.store)} points")
    for label, lam in cert.multipliers:
        pl = outcome.placements[label]
        images = ", ".join(str(outcome.store[i]) for i in pl.image_ids)
        print(f"  lambda = {format_complex(lam):>8}   copy {label}: {images}")
    print("witness set:", ", ".join(str(outcome.store[i]) for i in sorted(cert.witness_points)))


if __name__ == "__main__":
    main()
