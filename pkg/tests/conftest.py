import os
import tempfile

# keep the table cache out of the user's home and start every session cold
os.environ.setdefault("SUPERNABLA_CACHE", tempfile.mkdtemp(prefix="supernabla-test-cache-"))
