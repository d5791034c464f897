from pydantic_settings import BaseSettings
from pydantic import ConfigDict
from dotenv import load_dotenv

load_dotenv()


class Settings(BaseSettings):
    """
    Workbench configuration settings.

    Every bound the library enforces lives here so that a deployment can
    loosen or tighten it without touching code.

    Configuration is loaded with the following precedence:
    1. Actual environment variables
    2. .env file contents
    3. Default values
    """

    # Enumeration bounds
    MAX_ENUM_SIZE: int = 8
    MAX_FUNCTION_POINTS: int = 64
    MAX_FUNCTIONS: int = 4096
    MAX_TOPOLOGY_POINTS: int = 16
    MAX_SYNTACTIC_POLYNOMIALS: int = 20000

    # Naturals window and syntactic enumeration
    WINDOW: int = 50
    DEGREE_CAP: int = 3

    # Random search
    SEARCH_ATTEMPTS: int = 2000

    # Diagnostics
    LOG_LEVEL: str = "INFO"
    LANG: str = "en"

    model_config = ConfigDict(
        env_file=".env", env_file_encoding="utf-8", case_sensitive=True, extra="ignore"
    )
    """
    Pydantic model configuration:
    - Load from .env file with UTF-8 encoding
    - Case sensitive environment variables
    - Ignore extra environment variables not defined here
    """


settings = Settings()
