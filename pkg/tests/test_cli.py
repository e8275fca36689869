import json

import pytest

from chiygenus.cli import main, parse_bundle, parse_samples
from chiygenus.errors import ParseError
from chiygenus.exact_poly import Polynomial


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestChiY:
    def test_p2(self, capsys, descriptor_dir):
        doc = run_json(capsys, "chi-y", descriptor_dir / "p2.json")
        assert doc["chi_y"] == ["1", "-1", "1"]
        assert doc["descriptor"] == {"kind": "projective_space", "dim": 2}

    def test_at(self, capsys, descriptor_dir):
        assert run_json(capsys, "chi-y", descriptor_dir / "p2.json", "--at", "-1")["value"] == "3"

    def test_rational_at(self, capsys, descriptor_dir):
        assert run_json(capsys, "chi-y", descriptor_dir / "p2.json", "--at", "1/2")["value"] == "3/4"

    def test_bundle(self, capsys, descriptor_dir):
        doc = run_json(capsys, "chi-y", descriptor_dir / "p1.json", "--bundle", "rank=1,c1=3")
        assert doc["chi_y"] == ["4", "2"]

    def test_bundle_on_hodge_descriptor(self, capsys, descriptor_dir):
        code, _, err = run(capsys, "chi-y", descriptor_dir / "k3.json", "--bundle", "rank=1,c1=1")
        assert code == 1 and "UnsupportedModelError" in err

    def test_batch_keeps_order(self, capsys, descriptor_dir):
        docs = run_json(capsys, "chi-y", descriptor_dir / "p4.json", descriptor_dir / "p1.json")
        assert [d["chi_y"] for d in docs] == [["1", "-1", "1", "-1", "1"], ["1", "-1"]]

    def test_text_format(self, capsys, descriptor_dir):
        code, out, _ = run(capsys, "chi-y", descriptor_dir / "k3.json", "--format", "text")
        assert code == 0 and "chi_y  2 -20 2" in out.splitlines()

    @pytest.mark.parametrize("name, code", [("broken.json", 2), ("unknown.json", 2), ("missing.json", 2), ("bad_curve.json", 3)])
    def test_exit_codes(self, capsys, descriptor_dir, name, code):
        got, out, err = run(capsys, "chi-y", descriptor_dir / name)
        assert got == code and out == "" and err.startswith("error:")


class TestClass:
    def test_specialize_chern(self, capsys, descriptor_dir):
        assert run_json(capsys, "class", descriptor_dir / "p1.json", "--specialize", "chern")["class"] == {"[]": "1", "[1]": "2"}

    def test_component(self, capsys, descriptor_dir):
        assert run_json(capsys, "class", descriptor_dir / "p1.json", "--component", "1")["class"] == {"[1]": "-1"}

    def test_point(self, capsys, descriptor_dir):
        assert run_json(capsys, "class", descriptor_dir / "pt.json")["class"] == {"[]": "1"}

    def test_full_class_lists_polynomials(self, capsys, descriptor_dir):
        assert run_json(capsys, "class", descriptor_dir / "p1.json")["class"] == {"[]": "1", "[1]": ["1", "-1"]}

    def test_todd_p2(self, capsys, descriptor_dir):
        doc = run_json(capsys, "class", descriptor_dir / "p2.json", "--specialize", "todd")
        assert doc["class"] == {"[]": "1", "[1]": "3/2", "[2]": "1"}

    def test_unsupported(self, capsys, descriptor_dir):
        code, _, _ = run(capsys, "class", descriptor_dir / "k3.json")
        assert code == 1


class TestReconstruct:
    def test_samples(self, capsys):
        assert run_json(capsys, "reconstruct", "--dim", "2", "--samples", "0=1", "1=1", "-1=3")["chi_y"] == ["1", "-1", "1"]

    def test_variety(self, capsys, descriptor_dir):
        doc = run_json(capsys, "reconstruct", "--variety", descriptor_dir / "p3.json")
        assert doc["round_trip"] == "exact"
        assert list(doc["samples"].values()) == ["1", "0", "4", "-5"]

    def test_reciprocal(self, capsys):
        doc = run_json(capsys, "reconstruct", "--dim", "4", "--reciprocal", "--samples", "0=1", "1=1", "-1=5", "2=11")
        assert doc["chi_y"] == ["1", "-1", "1", "-1", "1"]

    def test_repeated_node(self, capsys):
        code, _, err = run(capsys, "reconstruct", "--dim", "1", "--samples", "0=1", "0=2")
        assert code == 1 and "0" in err

    def test_parse_helpers(self):
        assert [str(a) for a, _ in parse_samples(["1/2=3", "-1=4"])] == ["1/2", "-1"]
        with pytest.raises(ParseError):
            parse_samples(["1:2"])
        assert parse_bundle("rank=2,c1=1,c2=-3").chern == (1, -3)
        with pytest.raises(ParseError):
            parse_bundle("c1=3")


class TestDerived:
    def test_taylor(self, capsys, descriptor_dir):
        assert run_json(capsys, "derived", descriptor_dir / "p4.json", "--taylor-at", "-1")["taylor"] == ["5", "-10", "10", "-5", "1"]

    def test_higher_euler(self, capsys, descriptor_dir):
        assert run_json(capsys, "derived", descriptor_dir / "k3.json", "--higher-euler")["higher_euler"] == ["24", "-48", "28", "-4", "1"]

    def test_lw4(self, capsys, descriptor_dir):
        lw = run_json(capsys, "derived", descriptor_dir / "p4.json", "--lw", "4")["lw"]
        assert (lw["printed"], lw["derivative_route"], lw["agree"]) == ("-1", "1", False)

    def test_lw2(self, capsys, descriptor_dir):
        lw = run_json(capsys, "derived", descriptor_dir / "quintic.json", "--lw", "2")["lw"]
        assert lw["agree"] is True

    def test_derived_p(self, capsys, descriptor_dir):
        assert run_json(capsys, "derived", descriptor_dir / "p4.json", "--p", "2")["derived"] == ["1", "-3", "6"]


class TestVerify:
    def test_full(self, capsys):
        code, out, _ = run(capsys, "verify")
        assert code == 0
        assert sum(line.startswith("WARN") for line in out.splitlines()) == 2
        assert "0 failed" in out

    def test_quick(self, capsys):
        code, out, _ = run(capsys, "verify", "--quick")
        assert code == 0 and "0 failed" in out

    def test_corrupted_catalog(self, capsys, tmp_path):
        path = tmp_path / "bad_catalog.json"
        path.write_text(json.dumps({"p2": {"kind": "chi_y", "coeffs": [1, 5, 2]}}))
        code, out, _ = run(capsys, "verify", "--catalog", path)
        assert code == 4
        assert "violated: duality" in out


class TestCatalog:
    def test_default(self, capsys):
        doc = run_json(capsys, "catalog")
        assert doc["p2"] == ["1", "-1", "1"]
        assert {"pt", "p8", "quartic_surface", "quintic_threefold", "toric_p3", "p1xp1"} <= set(doc)

    def test_dim_filter(self, capsys):
        doc = run_json(capsys, "catalog", "--dim", "2")
        assert doc and all(Polynomial.from_strings(v).degree <= 2 for v in doc.values())
        assert "k3_hodge" in doc and "p3" not in doc and "p1" not in doc

    def test_text(self, capsys):
        code, out, _ = run(capsys, "catalog", "--format", "text")
        assert code == 0 and any(line.split()[:1] == ["p2"] and line.endswith("1 - y + y^2") for line in out.splitlines())


@pytest.mark.parametrize(
    "argv",
    [
        ["catalog"],
        ["chi-y", "{d}/quintic.json"],
        ["class", "{d}/p2.json"],
        ["derived", "{d}/p4.json", "--lw", "3"],
        ["reconstruct", "--variety", "{d}/p4.json"],
    ],
)
def test_deterministic_and_round_trips(capsys, descriptor_dir, argv):
    argv = [a.format(d=descriptor_dir) for a in argv]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    doc = json.loads(first)
    assert json.loads(json.dumps(doc, indent=2)) == doc
