import os

import pytest

from line_dispersal.errors import InstanceFormatError
from line_dispersal.utils import (
    ensure_directory_exists,
    read_jsonl_file,
    write_jsonl_file,
    write_text_file,
)


def test_output_directory_is_created(tmp_path):
    target = tmp_path / "runs" / "a" / "trace.jsonl"
    parent = ensure_directory_exists(str(target))
    assert parent == str(tmp_path / "runs" / "a")
    assert (tmp_path / "runs" / "a").is_dir()
    assert ensure_directory_exists(str(target)) == parent


def test_bare_file_name_uses_working_directory(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert os.path.samefile(ensure_directory_exists("out.txt"), tmp_path)


def test_jsonl_records_survive_a_write(tmp_path):
    path = str(tmp_path / "nested" / "events.jsonl")
    write_jsonl_file([{"kind": "shift", "amount": "1.5"}, {"kind": "merge"}], path)
    assert read_jsonl_file(path) == [{"kind": "shift", "amount": "1.5"}, {"kind": "merge"}]


def test_broken_jsonl_line_is_reported(tmp_path):
    path = str(tmp_path / "bad.jsonl")
    write_text_file('{"kind": "shift"}\n{oops\n', path)
    with pytest.raises(InstanceFormatError, match=":2:"):
        read_jsonl_file(path)
