from .instance_file import parse_instance, serialize_instance, read_instance, write_instance, parse_ranking_arg
from .report import Report, EXIT_AFFIRMATIVE, EXIT_NEGATIVE, EXIT_ERROR
