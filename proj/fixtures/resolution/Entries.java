public class Entries {
    static int counter;

    static {
        counter = 1;
    }

    {
        counter += 1;
    }

    Entries() {
        counter += 2;
    }

    Entries(int start) {
        counter = start;
    }

    void plain() {
        counter++;
    }

    abstract static class Inner {
        abstract void notAnEntry();

        int concrete() {
            return 42;
        }
    }

    Runnable anonymous() {
        return new Runnable() {
            @Override
            public void run() {
                counter--;
            }
        };
    }
}
