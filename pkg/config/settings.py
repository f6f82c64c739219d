from pydantic_settings import BaseSettings, SettingsConfigDict


# -----------------------------------------------------------------------------
# Settings
# -----------------------------------------------------------------------------
class Settings(BaseSettings):
    """
    Toolkit settings managed by Pydantic.
    Reads from environment variables and/or .env file.
    """
    ENVIRONMENT: str = "production"
    LOG_LEVEL: str = "WARNING"

    # Convolution engine
    CONVOLUTION_CROSSOVER: int = 64        # pattern length at which the FFT path takes over
    MAGNITUDE_BOUND: int = 2**50           # exact ceiling for the floating transform path
    DIRECT_BOUND: int = 2**62              # exact ceiling for int64 direct summation
    FFT_BATCH_BLOCKS: int = 256            # text blocks transformed per batch

    # Randomized algorithms
    ISOLATION_PHASE_CONSTANT: float = 2.0
    LAS_VEGAS_STEP_CONSTANT: float = 36.0
    DEFAULT_ALPHA: float = 1.0

    # CLI defaults (flags win)
    DEFAULT_SEED: int = 0
    DEFAULT_WILDCARD: str = "?"

    # Config to read from .env file if available
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore"
        )

settings = Settings()
