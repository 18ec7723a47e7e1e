import logging
# Create the logger; handlers and level come from settings.LOGGING
logger = logging.getLogger('basic')
err_logger = logging.getLogger('basic.error')
