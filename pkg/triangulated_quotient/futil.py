# coding=utf-8
"""Utilities for writing output files."""
import os
import tempfile


def write_atomic(folder, file_name, content):
    """Write text to a file so that readers never see a partially written file.

    The text is written to a temporary file in the target folder, which then
    replaces the target file.

    Args:
        folder: Text for the directory where the file will be written.
        file_name: Text for the name of the file.
        content: Text for the file contents.

    Returns:
        The full path to the written file.
    """
    folder = folder if folder else '.'
    if not os.path.isdir(folder):
        os.makedirs(folder)
    file_path = os.path.join(folder, file_name)
    fd, tmp_path = tempfile.mkstemp(dir=folder, prefix='.{}.'.format(file_name))
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as outf:
            outf.write(content)
        os.replace(tmp_path, file_path)
    except BaseException:
        if os.path.isfile(tmp_path):
            os.remove(tmp_path)
        raise
    return file_path


def write_path(file_path, content):
    """Write text atomically to a full file path."""
    folder, file_name = os.path.split(os.path.abspath(file_path))
    return write_atomic(folder, file_name, content)
