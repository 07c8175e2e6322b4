import pytest

from backend.field import make_field
from backend.sieve import load_norm_set, sieve_norms_odd
from frontend.app import cli


def invoke(runner, *args):
    return runner.invoke(cli, [str(a) for a in args])


def test_character(runner):
    result = invoke(runner, "character", "-r", -1)
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["Q(√-1)", "d=-4", "0+0-"]


def test_character_reports_reduction(runner):
    result = invoke(runner, "character", "-r", 12)
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert "d=12" in lines
    assert "reduced 12 = 3 * 2^2, r=3" in lines


def test_character_width(runner):
    result = invoke(runner, "character", "-r", 5, "--width", 3)
    assert result.stdout.splitlines()[-1] == "0+-"


def test_character_from_discriminant(runner):
    result = invoke(runner, "character", "-d", -8)
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == "0+0+0-0-"


@pytest.mark.parametrize(
    "args",
    [
        ("character", "-r", 4),
        ("character",),
        ("character", "-r", -1, "-d", -8),
        ("character", "-d", 12 * 4),
    ],
)
def test_character_usage_errors(runner, args):
    assert invoke(runner, *args).exit_code == 2


def test_sieve_list(runner):
    result = invoke(runner, "sieve", "-r", -1, "--max", 50)
    assert result.exit_code == 0
    assert result.stdout.split() == ["2", "5", "9", "13", "17", "21", "29", "33", "37", "41", "49"]


def test_sieve_half_basis(runner):
    result = invoke(runner, "sieve", "-r", 5, "--max", 10)
    assert result.stdout.split() == ["4", "5", "6", "9"]


def test_sieve_rejects_small_bound(runner):
    assert invoke(runner, "sieve", "-r", -1, "--max", 1).exit_code == 2


def test_sieve_binary_dump(runner, tmp_path):
    target = tmp_path / "gauss.qns"
    result = invoke(runner, "sieve", "-r", -1, "--max", 1000, "--format", "binary", "-o", target)
    assert result.exit_code == 0
    assert load_norm_set(target.read_bytes()) == sieve_norms_odd(make_field(-1), 1000)


def test_sieve_binary_needs_output(runner):
    assert invoke(runner, "sieve", "-r", -1, "--max", 100, "--format", "binary").exit_code == 2


def test_sieve_list_to_file(runner, tmp_path):
    target = tmp_path / "norms.txt"
    result = invoke(runner, "sieve", "-r", -1, "--max", 20, "-o", target)
    assert result.exit_code == 0
    assert result.stdout == ""
    assert target.read_text() == "2\n5\n9\n13\n17\n"


def test_classify(runner):
    result = invoke(runner, "classify", "-r", -1, "-p", 2, "-p", 3, "-p", 5)
    assert result.exit_code == 0
    assert result.stdout.splitlines() == [
        "2\tramified\t2",
        "3\tinert\t9",
        "5\tsplit\t5, 5",
        "split 1 ramified 1 inert 1",
    ]


def test_classify_up_to(runner):
    result = invoke(runner, "classify", "-r", -5, "--up-to", 10)
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == "split 2 ramified 2 inert 0"


def test_classify_rejects_composites(runner):
    assert invoke(runner, "classify", "-r", -1, "-p", 9).exit_code == 2


def test_atlas_text_golden(runner, tmp_path, golden_dir):
    expected = (golden_dir / "gauss_box10.txt").read_text(encoding="utf-8")
    outputs = []
    for run in range(3):
        target = tmp_path / f"gauss{run}.txt"
        result = invoke(runner, "atlas", "-r", -1, "--box", 10, "-o", target)
        assert result.exit_code == 0
        assert "sieve bound: 200" in result.stdout
        outputs.append(target.read_bytes())
    assert outputs[0] == outputs[1] == outputs[2]
    assert outputs[0].decode("utf-8") == expected


def test_atlas_svg_golden(runner, tmp_path, golden_dir):
    runs = []
    for run in range(3):
        target = tmp_path / f"gauss{run}.svg"
        result = invoke(runner, "atlas", "-r", -1, "--box", 10, "-o", target)
        assert result.exit_code == 0
        runs.append(target.read_bytes())
    assert runs[0] == runs[1] == runs[2]

    golden = golden_dir / "gauss_box10.svg"
    assert golden.exists(), f"missing golden {golden}"
    assert runs[0].decode("utf-8") == golden.read_text(encoding="utf-8")


def test_atlas_to_stdout(runner):
    result = invoke(runner, "atlas", "-r", -1, "--box", 1, "--format", "text")
    assert result.exit_code == 0
    assert result.stdout == "PUP\nU.U\nPUP\n"


def test_atlas_with_ideal(runner, tmp_path):
    target = tmp_path / "out.txt"
    result = invoke(
        runner, "atlas", "-r", -5, "--box", 8, "--ideal-norm", 2, "--ideal-shift", 1, "-o", target, "--format", "text"
    )
    assert result.exit_code == 0
    assert "ideal: [2, 1 + τ] (norm 2, shift 1)" in result.stdout
    assert "I" in target.read_text(encoding="utf-8")


def test_atlas_ideal_auto(runner, tmp_path):
    target = tmp_path / "auto.svg"
    result = invoke(runner, "atlas", "-r", -23, "--box", 5, "--ideal-auto", "-o", target)
    assert result.exit_code == 0
    assert "ideal: [2, 0 + τ]" in result.stdout
    assert "I = [2, 0 + τ]" in target.read_text(encoding="utf-8")


def test_atlas_rejects_invalid_ideal(runner, tmp_path):
    result = invoke(
        runner, "atlas", "-r", -5, "--box", 3, "--ideal-norm", 3, "--ideal-shift", 0, "-o", tmp_path / "bad.svg"
    )
    assert result.exit_code == 2
    assert "3 does not divide N(0 + τ) = 5" in result.output
    assert not (tmp_path / "bad.svg").exists()


@pytest.mark.parametrize(
    "extra",
    [
        ("--box", 3, "--xmin", -1),
        ("--ideal-norm", 2),
        ("--ideal-auto", "--ideal-norm", 2, "--ideal-shift", 1),
        ("--box", 2, "--max", 3),
        ("--xmin", 3, "--xmax", 1),
    ],
)
def test_atlas_usage_errors(runner, extra):
    assert invoke(runner, "atlas", "-r", -5, "--format", "text", *extra).exit_code == 2


def test_atlas_explicit_bounds(runner):
    result = invoke(runner, "atlas", "-r", -1, "--xmin", 0, "--xmax", 3, "--ymin", 0, "--ymax", 0, "--format", "text")
    assert result.exit_code == 0
    assert result.stdout == ".U.P\n"


def test_atlas_config_file(runner, tmp_path):
    config = tmp_path / "style.env"
    config.write_text('cell_size=20\ncolor_prime="#ff00ff"\n')
    target = tmp_path / "styled.svg"
    result = invoke(runner, "atlas", "-r", -1, "--box", 2, "--config", config, "-o", target)
    assert result.exit_code == 0
    assert 'fill="#ff00ff"' in target.read_text(encoding="utf-8")


def test_atlas_flags_override_config(runner, tmp_path):
    config = tmp_path / "style.env"
    config.write_text("cell_size=20\n")
    small, large = tmp_path / "small.svg", tmp_path / "large.svg"
    invoke(runner, "atlas", "-r", -1, "--box", 2, "--config", config, "--cell-size", 5, "-o", small)
    invoke(runner, "atlas", "-r", -1, "--box", 2, "--config", config, "-o", large)
    assert len(small.read_bytes()) > 0
    assert small.read_text(encoding="utf-8") != large.read_text(encoding="utf-8")


def test_atlas_config_unknown_key(runner, tmp_path):
    config = tmp_path / "style.env"
    config.write_text("colour=red\n")
    result = invoke(runner, "atlas", "-r", -1, "--box", 2, "--config", config, "--format", "text")
    assert result.exit_code == 2


@pytest.mark.slow
@pytest.mark.parametrize("r", [-1, 79])
def test_verify_passes(runner, r):
    result = invoke(runner, "verify", "-r", r, "--max", 100000)
    assert result.exit_code == 0
    assert "OK" in result.stdout


def test_verify_reports_injected_fault(runner, monkeypatch):
    import backend.verify

    genuine = backend.verify.sieve_norms_odd

    def flipped(f, limit):
        norm_set = genuine(f, limit)
        members = set(norm_set) ^ {13}
        return type(norm_set).from_members(norm_set.d, norm_set.max, sorted(members))

    monkeypatch.setattr(backend.verify, "sieve_norms_odd", flipped)
    result = invoke(runner, "verify", "-r", -1, "--max", 1000, "--box", 3)
    assert result.exit_code == 1
    assert "norm 13" in result.stdout


def test_verify_rejects_large_bound(runner):
    assert invoke(runner, "verify", "-r", -1, "--max", 10**7).exit_code == 2


def test_gallery(runner, tmp_path):
    result = invoke(runner, "gallery", "complex-class-2", "-o", tmp_path, "--box", 4, "--format", "text")
    assert result.exit_code == 0
    assert (tmp_path / "r-5.txt").exists()
    assert "I=[" in result.stdout
    assert len(list(tmp_path.glob("*.txt"))) == 13


@pytest.mark.parametrize("name, value", [("QUADPRIME_LOG_LEVEL", "chatty"), ("QUADPRIME_SEGMENT_SIZE", "100")])
def test_invalid_settings_exit_with_usage_code(runner, monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    result = invoke(runner, "character", "-r", -1)
    assert result.exit_code == 2
    assert "Invalid configuration" in result.output
