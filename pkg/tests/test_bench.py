import pytest

from braidtwist.bench import (
    CSV_HEADER,
    ExperimentConfig,
    Row,
    bucket_of,
    run_experiment,
    sample_half_twist,
)
from braidtwist.halftwist import verify_witness
from braidtwist.randomized import RandomSource
from braidtwist.word import BraidWord


def test_sample_without_conjugator_is_a_generator():
    for seed in range(10):
        word, truth = sample_half_twist(5, 1, 0, RandomSource(seed))
        assert word == BraidWord.generator_power(5, truth.generator, 1)
        assert len(truth.conjugator) == 0


def test_samples_verify_against_ground_truth():
    rng = RandomSource(6)
    for _ in range(100):
        k = rng.randint(1, 4)
        word, truth = sample_half_twist(rng.randint(2, 6), k, rng.randint(0, 30), rng)
        assert truth.power == k
        assert verify_witness(word, truth)


def test_sample_stream_is_deterministic():
    a = [sample_half_twist(4, 2, 10, r) for r in [RandomSource(5)] for _ in range(5)]
    b = [sample_half_twist(4, 2, 10, r) for r in [RandomSource(5)] for _ in range(5)]
    assert a == b


def test_sample_errors():
    with pytest.raises(ValueError):
        sample_half_twist(1, 1, 3, RandomSource(0))
    with pytest.raises(ValueError):
        sample_half_twist(4, 0, 3, RandomSource(0))


@pytest.mark.parametrize("length,label", [(0, 0), (1, 100), (100, 100), (101, 200), (299, 300)])
def test_bucket_labels(length, label):
    assert bucket_of(length, 100) == label


def test_empty_experiment():
    table = run_experiment(ExperimentConfig(5, [1, 2], 0, (1, 10)))
    assert table.rows == []
    assert table.to_csv() == ",".join(CSV_HEADER) + "\n"


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(5, [1], 10, (5, 1))
    with pytest.raises(ValueError):
        ExperimentConfig(5, [0], 10, (1, 5))
    with pytest.raises(ValueError):
        ExperimentConfig(5, [1], 10, (1, 5), bucket_width=0)
    with pytest.raises(ValueError):
        ExperimentConfig(1, [1], 10, (1, 5))


def test_csv_format():
    table = run_experiment(ExperimentConfig(4, [1, 2], 30, (1, 20), bucket_width=50, seed=3))
    lines = table.to_csv().splitlines()
    assert lines[0] == "strands,power,length_bucket,trials,successes,rate"
    total = 0
    for line in lines[1:]:
        strands, k, bucket, trials, wins, rate = line.split(",")
        assert strands == "4" and k in ("1", "2")
        assert int(bucket) % 50 == 0
        assert 0 <= int(wins) <= int(trials)
        assert len(rate.split(".")[1]) == 3
        assert abs(float(rate) - int(wins) / int(trials)) < 5e-4
        total += int(trials)
    assert total == 60


def test_row_rate():
    assert Row(5, 1, 100, 4, 3).rate == 0.75


def test_reproducible_and_order_independent():
    cfg = ExperimentConfig(5, [1, 2], 40, (5, 40), seed=11)
    first = run_experiment(cfg).to_csv()
    assert run_experiment(cfg).to_csv() == first
    parallel = ExperimentConfig(5, [1, 2], 40, (5, 40), seed=11, workers=2)
    assert run_experiment(parallel).to_csv() == first
    other = ExperimentConfig(5, [1, 2], 40, (5, 40), seed=12)
    assert run_experiment(other).to_csv() != first


def test_no_genuine_false_and_decaying_trend():
    cfg = ExperimentConfig(5, [1], 800, (5, 90), seed=2)
    table = run_experiment(cfg)
    assert table.genuine_false == 0
    short, long_ = table.cell(1, 100), table.cell(1, 400)
    assert short is not None and long_ is not None
    assert short.rate >= long_.rate - 0.05
