from .file_utils import read_input_file, report_path, scenario_files

__all__ = ["read_input_file", "report_path", "scenario_files"]
