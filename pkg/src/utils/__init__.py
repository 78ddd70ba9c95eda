from .set_up_logger import setup_logger
