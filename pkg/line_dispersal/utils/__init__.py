from .file_operations import (
    ensure_directory_exists,
    read_jsonl_file,
    read_text_source,
    write_jsonl_file,
    write_text_file,
)
