"""Smoke test for the gallai_py extension module."""

from fractions import Fraction

import gallai_py as g


def main():
    block = g.block_coloring(2, 2)
    assert block.rows() == [[1, 1], [2, 2]]
    assert g.find_any(block, (2, 2), (2, 2)) is None

    c = g.Coloring([[1, 2], [3, 4]], 4)
    cert = g.find_any(c, (2, 2), (2, 2))
    assert cert.kind == "rainbow" and cert.rows == [1, 2] and cert.cols == [1, 2]
    assert g.verify_certificate(c, cert)
    assert g.Coloring.parse(c.to_text()) == c
    assert '"source_hash"' in cert.to_json(c)

    assert g.random_coloring(3, 4, 3, 7) == g.random_coloring(3, 4, 3, 7)
    assert g.find_mono(g.random_coloring(7, 37, 1, 0), (2, 2)).rows == [1, 2]

    outcome, witness, _ = g.exists_avoiding(1, 2, 2, (1, 2), (1, 2))
    assert outcome == "exhausted" and witness is None
    assert g.min_forcing_n2(1, 3, (1, 3), (1, 3), 12) == 5
    assert g.zarankiewicz_exact(4, 4, 2, 2) == 9
    assert abs(g.zarankiewicz_bound(4, 4, 2, 2) - 10.0) < 1e-12

    assert g.bound("k2t", {"t": 2, "r": 1}) == {"n1": 7, "n2": 37}
    assert g.bound("main-n", {"s": 2, "t": 2, "r": 1})["n"] == 768
    union = g.bound("union-bound", {"s": 2, "t": 2, "r": 1})
    assert union == {"probability": Fraction(3, 4), "closed_form": Fraction(3, 4), "below_one": True}
    assert g.bound("euclid-dims", {"t": 2, "r": 3}, kind="prism")["d"] == 60

    cnf = g.export_cnf(1, 2, 2, (1, 2), (1, 2))
    assert any(line.startswith("p cnf") for line in cnf.splitlines())
    assert g.decode_model(1, 2, 2, [1, -2, -3, 4]).rows() == [[1, 2]]

    points, colors = g.embed_coloring(block, 2 ** 0.5, 2 ** 0.5)
    assert len(points) == 4 and colors == [1, 1, 2, 2]
    side = 2 ** 0.5
    square = [[0.0, 0.0], [side, 0.0], [0.0, side], [side, side]]
    assert g.congruent(points, [p + [0.0, 0.0] for p in square]) is not None
    assert g.verify_translation(c, (2, 2), (2, 2)) == ("rainbow", True)
    assert g.verify_translation(block, (2, 2), (2, 2)) == ("none", True)

    try:
        g.Coloring.parse("1 1 1\n2\n")
    except ValueError:
        pass
    else:
        raise AssertionError("color out of range accepted")
    print("smoke test passed")


if __name__ == "__main__":
    main()
