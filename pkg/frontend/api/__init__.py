# frontend/api package
