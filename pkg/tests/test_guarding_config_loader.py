from curvilinearguard.config.guarding_config_loader import GuardingConfig, load_guarding_config


def test_missing_file_gives_defaults(tmp_path, capsys):
    config = load_guarding_config(str(tmp_path))
    assert config == GuardingConfig()
    assert "does not exist" in capsys.readouterr().out


def test_missing_file_quietly(tmp_path, capsys):
    load_guarding_config(str(tmp_path), quiet=True)
    assert capsys.readouterr().out == ""


def test_values_are_read(tmp_path):
    (tmp_path / "guarding-config.yml").write_text(
        "verification:\n"
        "  density: 20\n"
        "exhaustive:\n"
        "  mode: edge\n"
        "  max_n: 9\n"
        "rendering:\n"
        "  width: 800\n"
        "  margin: 1e-2\n"
    )
    config = load_guarding_config(str(tmp_path))
    assert config.verification.density == 20
    assert config.verification.arc_samples == 64
    assert config.exhaustive.mode == "edge"
    assert config.exhaustive.max_n == 9
    assert config.rendering.width == 800
    assert config.rendering.margin == 0.01
    assert config.random.seed == 0


def test_empty_sections_fall_back(tmp_path):
    (tmp_path / "guarding-config.yml").write_text("verification:\nrandom:\n")
    config = load_guarding_config(str(tmp_path))
    assert config.verification.density == 50
    assert config.random.seed == 0


def test_empty_file(tmp_path):
    (tmp_path / "guarding-config.yml").write_text("")
    assert load_guarding_config(str(tmp_path)) == GuardingConfig()


def test_template_context(tmp_path):
    (tmp_path / "run.yml").write_text("random:\n  seed: {{ seed }}\nexhaustive:\n  max_n: {{ n }}\n")
    config = load_guarding_config(str(tmp_path), context={"seed": 7, "n": 10}, file_name="run.yml")
    assert config.random.seed == 7
    assert config.exhaustive.max_n == 10
