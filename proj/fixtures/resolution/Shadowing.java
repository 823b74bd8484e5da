public class Shadowing {
    int value = 7;
    int count;

    int useField() {
        count = value + 1;
        return count;
    }

    int shadowField(int value) {
        int result = value;
        return result + this.value;
    }

    int localShadow() {
        int value = 1;
        {
            int inner = value;
            value = inner + count;
        }
        for (int cursor = 0; cursor < 3; cursor++) {
            count += cursor;
        }
        return value + undeclared;
    }
}
