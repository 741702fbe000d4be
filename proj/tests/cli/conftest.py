import json
import os
import pathlib
import subprocess

import pytest


def pytest_addoption(parser):
    parser.addoption("--cli", default=os.environ.get("UNCSTATES_CLI", "build/uncstates"))
    parser.addoption("--schemas", default="schemas")


@pytest.fixture(scope="session")
def cli(request):
    return str(pathlib.Path(request.config.getoption("--cli")).resolve())


@pytest.fixture(scope="session")
def schema(request):
    root = pathlib.Path(request.config.getoption("--schemas"))

    def load(name):
        return json.loads((root / f"{name}.schema.json").read_text())

    return load


@pytest.fixture
def run(cli):
    def call(*args, env=None, check_rc=None):
        full_env = {k: v for k, v in os.environ.items() if k != "UNCSTATES_CONFIG"}
        if env:
            full_env.update(env)
        p = subprocess.run([cli, *args], capture_output=True, text=True, env=full_env, timeout=600)
        if check_rc is not None:
            assert p.returncode == check_rc, p.stderr
        return p

    return call
