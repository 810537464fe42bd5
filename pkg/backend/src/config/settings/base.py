import os

from dotenv import load_dotenv


class Config:
    """
    Configuration class for handling toolkit settings.
    """

    def __init__(self):
        self.load_env()

    def load_env(self):
        """
        Load environment variables from .env file.
        """
        load_dotenv()
        self.BFS_CAP = int(os.getenv("COCONE_BFS_CAP", 1_000_000))
        self.STABILIZATION_CAP = int(os.getenv("COCONE_STABILIZATION_CAP", 64))
        self.FIT_HOLDOUT = int(os.getenv("COCONE_FIT_HOLDOUT", 8))
        self.GENERATION_ATTEMPTS = int(os.getenv("COCONE_GENERATION_ATTEMPTS", 50))
        self.LOG_LEVEL = os.getenv("COCONE_LOG_LEVEL", "WARNING").upper()
        self.LOG_FILE = os.getenv("COCONE_LOG_FILE")
        self._validate_env()

    def _validate_env(self):
        """
        Ensure that numeric limits are usable.
        """
        if self.BFS_CAP <= 0:
            raise ValueError("COCONE_BFS_CAP must be a positive integer")
        if self.STABILIZATION_CAP <= 0:
            raise ValueError("COCONE_STABILIZATION_CAP must be a positive integer")
        if self.FIT_HOLDOUT < 0:
            raise ValueError("COCONE_FIT_HOLDOUT must not be negative")
        if self.GENERATION_ATTEMPTS <= 0:
            raise ValueError("COCONE_GENERATION_ATTEMPTS must be a positive integer")


config_env = Config()
