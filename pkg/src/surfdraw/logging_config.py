from loguru import logger

logger.disable("surfdraw")
