import random

from zreorder.models.run import Command

BASES = [
    b"map { tail+ = 1; tail- = 1; patch { 0 -> 2, 1 -> 3, 2 -> 1 } }",
    b"map { tail+ = 0; tail- = 0; patch { 0 -> 1, 1 -> 0 } }",
    b"compose(paired_shift, map { tail+ = 2; tail- = 2; patch { } })",
]
MUTATIONS = 1000


def _mutate(rng: random.Random, data: bytes) -> bytes:
    """Remplace, insère ou supprime un ou deux octets."""
    for _ in range(rng.randint(1, 2)):
        i = rng.randrange(len(data))
        op = rng.choice(("replace", "insert", "delete"))
        if op == "replace":
            data = data[:i] + bytes([rng.randrange(256)]) + data[i + 1:]
        elif op == "insert":
            data = data[:i] + bytes([rng.randrange(256)]) + data[i:]
        else:
            data = data[:i] + data[i + 1:]
    return data


def test_mutated_inputs_never_crash(spec_file, invoke):
    """Test que des entrées mutées donnent toujours un code 0, 1 ou 2 avec diagnostic."""
    rng = random.Random(20240611)
    commands = [c.value for c in Command]
    seen = set()
    for n in range(MUTATIONS):
        data = _mutate(rng, BASES[n % len(BASES)])
        command = commands[n % len(commands)]
        code, out, err = invoke(command, spec_file(data), window=(-10, 10), triple_samples=500)
        assert code in (0, 1, 2), (data, command)
        assert out
        assert "erreur interne" not in err, (data, command, err)
        if code != 0:
            assert err.strip(), (data, command)
        seen.add(code)
    assert 2 in seen
