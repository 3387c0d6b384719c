# Package initialization for utils
