# Shared constants and small numeric helpers
