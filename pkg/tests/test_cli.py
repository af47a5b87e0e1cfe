"""End-to-end tests of every CLI surface, via main(argv)."""

import json

import pytest

from powersums.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.strip().splitlines() if line]


def test_bernoulli(capsys):
    code, out, _ = run(capsys, "bernoulli", "--q", "12")
    assert code == 0 and "-691/2730" in out
    code, out, _ = run(capsys, "bernoulli", "--q", "3", "--json")
    payload = json_lines(out)[0]
    assert payload == {
        "q": "3",
        "number": "0",
        "coefficients": ["0", "1/2", "-3/2", "1"],
    }


def test_powersum(capsys):
    code, out, _ = run(capsys, "powersum", "--k", "1", "--l", "2", "--json")
    assert code == 0
    assert json_lines(out)[0]["coefficients"] == ["0", "1/2", "3/2"]
    code, out, _ = run(capsys, "powersum", "--k", "1", "--l", "2", "--eval", "8")
    assert code == 0 and out.strip() == "100"
    code, out, _ = run(capsys, "powersum", "--k", "3", "--l", "3", "--eval", "2", "--json")
    assert json_lines(out)[0]["value"] == "432"


def test_lemma6_single(capsys):
    code, out, _ = run(capsys, "lemma6", "--q", "6", "--l", "2", "--json")
    assert code == 0
    payload = json_lines(out)[0]
    assert payload["d"] == "2"
    assert payload["conclusion_i"] is True and payload["conclusion_ii"] is True
    assert payload["mod4_snapshot"] == ["0", "0", "1", "0", "3", "2", "2"]

    code, out, _ = run(capsys, "lemma6", "--q", "2", "--l", "2")
    assert code == 0 and "i=exempt" in out

    code, out, _ = run(capsys, "lemma6", "--q", "3", "--l", "2", "--mod", "2", "--json")
    assert json_lines(out)[0]["mod2_snapshot"] == ["0", "1", "1"]


def test_lemma6_grid(capsys):
    code, out, _ = run(capsys, "lemma6", "--q-max", "6", "--l-list", "2,4", "--json")
    assert code == 0
    payloads = json_lines(out)
    assert len(payloads) == 10  # q in 2..6 crossed with l in {2, 4}
    assert all(p["conclusion_ii"] for p in payloads)
    assert [p["q"] for p in payloads][:4] == ["2", "2", "3", "3"]


def test_lemma6_usage_errors(capsys):
    code, _, err = run(capsys, "lemma6", "--q", "6", "--l", "3")
    assert code == 1 and "even" in err
    code, _, err = run(capsys, "lemma6", "--q", "6", "--l", "2", "--q-max", "8")
    assert code == 1
    code, _, err = run(capsys, "lemma6", "--q", "6")
    assert code == 1


def test_search_formats(capsys):
    code, out, _ = run(capsys, "search", "--k", "1", "--l", "2", "--x-max", "1000", "--n-max", "2", "--json")
    assert code == 0
    payloads = json_lines(out)
    assert {"k": "1", "l": "2", "x": "8", "y": "10", "n": "2", "source": "search"} in payloads

    code, out, _ = run(capsys, "search", "--k", "1", "--l", "2", "--x-max", "1000", "--n-max", "2", "--csv")
    lines = out.strip().splitlines()
    assert lines[0] == "k,l,x,y,n,source"
    assert "1,2,8,10,2,search" in lines

    code, out, _ = run(capsys, "search", "--k", "1", "--l", "2", "--x-max", "1000", "--n-max", "2")
    assert "x" in out.splitlines()[0] and "800" in out

    code, out, _ = run(capsys, "search", "--k", "3", "--l", "2", "--x-max", "5", "--n-max", "2")
    assert code == 0 and "(no records)" in out


def test_search_partitions_env(capsys, monkeypatch):
    monkeypatch.setenv("POWERSUM_PARTITIONS", "4")
    code, out, _ = run(capsys, "search", "--k", "1", "--l", "2", "--x-max", "1000", "--n-max", "2", "--json")
    assert code == 0
    assert any(p["x"] == "8" for p in json_lines(out))


def test_pell(capsys):
    code, out, _ = run(capsys, "pell", "--d", "24")
    assert code == 0 and "u=5 v=1" in out
    code, out, _ = run(capsys, "pell", "--d", "24", "--json")
    payload = json_lines(out)[0]
    assert payload["cf_a0"] == "4" and payload["cf_period"] == ["1", "8"]
    assert payload["fundamental"] == {"u": "5", "v": "1"}

    code, out, _ = run(capsys, "pell", "--d", "15", "--n", "4", "--bound", "10", "--json")
    pairs = {(p["u"], p["v"]) for p in json_lines(out)}
    assert ("8", "2") in pairs and ("2", "0") in pairs

    code, _, err = run(capsys, "pell", "--d", "25")
    assert code == 1 and "perfect square" in err


def test_family(capsys):
    code, out, _ = run(capsys, "family", "--k", "1", "--l", "2", "--count", "2", "--json")
    assert code == 0
    payloads = json_lines(out)
    assert payloads[0] == {
        "k": "1",
        "l": "2",
        "x": "8",
        "y": "10",
        "u": "49",
        "v": "10",
        "verified": True,
    }
    assert payloads[1]["x"] == "800" and payloads[1]["y"] == "980"

    code, out, err = run(capsys, "family", "--k", "3", "--l", "2", "--count", "1", "--bound", "100", "--json")
    assert code == 0 and out.strip() == ""
    assert "0 of 1" in err

    code, out, _ = run(capsys, "family", "--k", "1", "--l", "2", "--count", "1", "--csv")
    lines = out.strip().splitlines()
    assert lines[0] == "k,l,x,y,u,v,verified"
    assert lines[1] == "1,2,8,10,49,10,True"


def test_report(capsys):
    code, out, _ = run(capsys, "report", "--k", "1", "--l", "2", "--n-list", "2,3", "--json")
    assert code == 0
    payload = json_lines(out)[0]
    assert payload["exponents"][0]["exceptional"] == "shape_b"
    assert payload["exponents"][1]["bound_applies"] is True

    code, out, _ = run(capsys, "report", "--k", "2", "--l", "2", "--n-list", "2")
    assert code == 0 and "bound applies" in out


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["family", "--k", "2", "--l", "2", "--count", "1"])
    assert exc.value.code == 1
    capsys.readouterr()

    with pytest.raises(SystemExit) as exc:
        main(["search", "--k", "1"])
    assert exc.value.code == 1
    capsys.readouterr()

    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 1
    capsys.readouterr()

    code, _, err = run(capsys, "bernoulli", "--q", "4", "--csv")
    assert code == 1 and "record streams" in err


def test_verification_failure_exit_code(capsys, monkeypatch):
    import powersums.search as search_mod

    monkeypatch.setattr(search_mod, "power_sum_direct", lambda k, l, x: -1)
    code, _, err = run(capsys, "search", "--k", "1", "--l", "2", "--x-max", "100", "--n-max", "2")
    assert code == 2 and "verification failure" in err
