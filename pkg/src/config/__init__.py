from .config import load_config, SearchConfig, LogConfig, search_config, log_config
