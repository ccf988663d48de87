import csv
import io
import json

import pytest

from eaqeckit import FMatrix, from_generator
from eaqeckit.cli import main
from conftest import random_code
import random


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestConstruct:
    def test_vandermonde_row(self, capsys):
        code, out, _ = run(capsys, "construct", "vandermonde",
                           "q=13", "n=12", "k=4", "t=5", "j=7")
        assert code == 0
        blob = json.loads(out)
        assert blob["computed"]["c"] == 8 and blob["computed"]["mds"]
        assert blob["verified"]

    def test_grs_text_output(self, capsys):
        code, out, _ = run(capsys, "--output", "text", "construct",
                           "grs-ext", "q=9", "k=4")
        assert code == 0
        assert "[[10,1,7;3]]_3^2" in out and "verified=True" in out

    def test_constraint_exit(self, capsys):
        code, _, err = run(capsys, "construct", "vandermonde",
                           "q=13", "n=12", "k=4", "t=6", "j=7")
        assert code == 2
        assert "t <= k+1 violated: 6 <= 5" in err

    def test_bad_family_params(self, capsys):
        code, _, err = run(capsys, "construct", "grs-ext", "q=9", "n=10")
        assert code == 4 and "missing" in err

    def test_emit_matrices(self, capsys):
        code, out, _ = run(capsys, "--emit-matrices", "construct",
                           "gabidulin", "q=11^5", "n=5", "k1=3", "k2=2", "t=2")
        assert code == 0
        blob = json.loads(out)
        assert FMatrix.from_text(blob["G1"]).nrows == 3

    def test_json_deterministic(self, capsys):
        args = ("construct", "vandermonde", "q=13", "n=12", "k=5", "t=6", "j=6")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2


class TestTable:
    def test_table1_csv(self, capsys):
        code, out, _ = run(capsys, "--output", "csv", "table", "1")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == "q,n,k,t,j,params,c_product,c_stack,slack".split(",")
        assert len(rows) == 15
        assert rows[1] == ["13", "12", "4", "5", "7", "[[12,4,9;8]]_13",
                           "8", "8", "0"]
        assert all(r[-1] == "0" for r in rows[1:])

    def test_table2_csv(self, capsys):
        code, out, _ = run(capsys, "--output", "csv", "table", "2")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == "q,n,k1,k2,t,params,c_product,c_stack,slack".split(",")
        assert [r[5] for r in rows[1:]] == [
            "[[5,2,3;1]]_11^5", "[[6,2,4;2]]_13^6", "[[8,4,4;2]]_17^8"]

    def test_table1_json_all_mds(self, capsys):
        code, out, _ = run(capsys, "table", "1")
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 14
        assert all(r["verified"] and r["computed"]["mds"] for r in rows)


class TestEbits:
    def _write_pair(self, tmp_path, f13):
        g = f13.primitive_element()
        G1 = FMatrix(f13, [[(g**i) ** c for c in range(12)] for i in range(4)], 12)
        H2 = FMatrix(f13, [[(g**i) ** c for c in range(12)] for i in range(4, 12)], 12)
        g1 = tmp_path / "g1.txt"
        h2 = tmp_path / "h2.txt"
        g1.write_text(G1.to_text())
        h2.write_text(H2.to_text())
        return str(g1), str(h2)

    def test_table_pair(self, capsys, tmp_path, f13):
        g1, h2 = self._write_pair(tmp_path, f13)
        code, out, _ = run(capsys, "ebits", g1, h2)
        assert code == 0
        blob = json.loads(out)
        assert blob["c_product"] == blob["c_stack"] == 8 and blob["agree"]

    def test_full_space_zero(self, capsys, tmp_path, f13):
        g1 = tmp_path / "g1.txt"
        h2 = tmp_path / "h2.txt"
        g1.write_text(FMatrix.identity(f13, 4).to_text())
        h2.write_text(FMatrix(f13, [[1, 2, 3, 4]], 4).to_text())
        code, out, _ = run(capsys, "ebits", str(g1), str(h2))
        assert code == 0 and json.loads(out)["c_product"] == 0

    def test_field_mismatch(self, capsys, tmp_path, f13, f9):
        g1 = tmp_path / "g1.txt"
        h2 = tmp_path / "h2.txt"
        g1.write_text(FMatrix.identity(f13, 4).to_text())
        h2.write_text(FMatrix.identity(f9, 4).to_text())
        code, _, err = run(capsys, "ebits", str(g1), str(h2))
        assert code == 4 and "bad input" in err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "ebits", str(tmp_path / "no.txt"),
                           str(tmp_path / "no2.txt"))
        assert code == 4

    def test_twist_agreement_random(self, capsys, tmp_path, f9):
        rng = random.Random(7)
        for i in range(10):
            C1 = random_code(rng, f9, 5, rng.randint(1, 4))
            C2 = random_code(rng, f9, 5, rng.randint(1, 4))
            g1 = tmp_path / f"g{i}.txt"
            h2 = tmp_path / f"h{i}.txt"
            g1.write_text(C1.G.to_text())
            h2.write_text(C2.H.to_text())
            code, out, _ = run(capsys, "ebits", str(g1), str(h2), "--s", "1")
            assert code == 0 and json.loads(out)["agree"]


class TestVerify:
    def test_repetition_confirmed(self, capsys, tmp_path, f2):
        path = tmp_path / "rep.txt"
        path.write_text(from_generator(FMatrix(f2, [[1, 1, 1]], 3)).to_text())
        code, out, _ = run(capsys, "verify", str(path), "--d", "3")
        assert code == 0
        blob = json.loads(out)
        assert blob["verdict"] == "confirmed" and blob["method"] == "exhaustive"

    def test_table_code_confirmed(self, capsys, tmp_path, f13):
        g = f13.primitive_element()
        G = FMatrix(f13, [[(g**i) ** c for c in range(12)] for i in range(4)], 12)
        path = tmp_path / "c.txt"
        path.write_text(from_generator(G).to_text())
        code, out, _ = run(capsys, "verify", str(path), "--k", "4", "--d", "9")
        assert code == 0 and json.loads(out)["verdict"] == "confirmed"

    def test_refuted_with_witness(self, capsys, tmp_path, f13):
        g = f13.primitive_element()
        G = FMatrix(f13, [[(g**i) ** c for c in range(12)] for i in range(4)], 12)
        path = tmp_path / "c.txt"
        path.write_text(from_generator(G).to_text())
        code, out, _ = run(capsys, "verify", str(path), "--d", "10")
        assert code == 1
        blob = json.loads(out)
        assert blob["verdict"] == "refuted"
        word = [f13.element(x) for x in blob["certificate"]]
        assert sum(1 for x in word if x) == 9

    def test_wrong_k_refuted(self, capsys, tmp_path, f2):
        path = tmp_path / "rep.txt"
        path.write_text(from_generator(FMatrix(f2, [[1, 1, 1]], 3)).to_text())
        code, out, _ = run(capsys, "verify", str(path), "--k", "2")
        assert code == 1 and json.loads(out)["verdict"] == "refuted"

    def test_infeasible(self, capsys, tmp_path, f13):
        # MDS [10,4] plus a zero column: d = 7 but not MDS, so with a tiny
        # budget no distance strategy applies
        g = f13.primitive_element()
        rows = [[(g**i) ** c for c in range(10)] + [f13.zero] for i in range(4)]
        path = tmp_path / "big.txt"
        path.write_text(from_generator(FMatrix(f13, rows, 11)).to_text())
        code, _, err = run(capsys, "--budget", "10", "verify", str(path))
        assert code == 5 and "infeasible" in err


class TestSelftest:
    def test_default_seed(self, capsys):
        code, out, _ = run(capsys, "selftest", "--trials", "60")
        assert code == 0
        assert "60 trials, 0 failures" in out

    def test_other_seed(self, capsys):
        code, out, _ = run(capsys, "--seed", "5", "selftest", "--trials", "40")
        assert code == 0 and "(seed=5)" in out


class TestConfig:
    def test_bad_budget(self, capsys):
        code, _, err = run(capsys, "--budget", "0", "table", "1")
        assert code == 4 and "budget" in err
